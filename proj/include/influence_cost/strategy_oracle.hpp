#pragma once

// Brute-force minimum adversarial cost over discretized allocation plans.
//
// The search is exact on its grid and does not consult the closed-form cost
// laws. It runs in two stages:
//   1. Every multiset of per-identity allocations for a single window (up to
//      `max_identities` identities, values on the grid) is enumerated and
//      checked against the activation threshold, the rate limit and the
//      influence target. Feasible patterns are kept per aggregate demand.
//   2. Acquisition schedules are searched window by window. The state is
//      whatever resource carries over under the spec's semantics (stock,
//      unexpired purchases, or nothing), and every acquisition amount on the
//      grid is tried from every reachable state.
// Both stages count toward `plans_examined`; exceeding the ceiling throws
// BudgetExceeded rather than truncating.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cost_engine.hpp"
#include "resource_model.hpp"

namespace influence_cost {

/// How acquired resource carries across windows and identities.
enum class PlanSemantics {
  Stock,            // reusable and transferable: bought once, re-partitioned freely
  WindowLocal,      // nothing carries over; optionally rate-limited per identity
  BoundedReuse,     // transferable stock that expires k windows after purchase
  PartialTransfer,  // transferable stock for at most alpha of the allocation, rest renewed
};

inline std::string_view to_string(PlanSemantics s) {
  switch (s) {
    case PlanSemantics::Stock: return "stock";
    case PlanSemantics::WindowLocal: return "window-local";
    case PlanSemantics::BoundedReuse: return "bounded-reuse";
    case PlanSemantics::PartialTransfer: return "partial-transfer";
  }
  return "stock";
}

inline PlanSemantics plan_semantics(const ResourceSpec& spec) {
  if (spec.partial_properties)
    throw std::invalid_argument("resource '" + spec.name + "' has model-dependent semantics; no plan model");
  if (spec.reuse_horizon()) {
    if (!spec.identity_transferable())
      throw std::invalid_argument("bounded reuse is modeled only for identity-transferable resources");
    return PlanSemantics::BoundedReuse;
  }
  if (spec.alpha()) {
    if (!spec.temporally_reusable())
      throw std::invalid_argument("partial transferability is modeled only for temporally reusable resources");
    return PlanSemantics::PartialTransfer;
  }
  if (!spec.temporally_reusable()) return PlanSemantics::WindowLocal;
  if (spec.identity_transferable()) return PlanSemantics::Stock;
  throw std::invalid_argument("reusable identity-bound stock is not modeled by the oracle");
}

struct AllocationPlan {
  /// identities[t][v] = r_v(t); zero-allocation identities are omitted.
  std::vector<std::vector<double>> identities;
  /// Resource newly acquired in each window; the expenditure events.
  std::vector<double> acquisitions;
  /// Amount of each window's allocation drawn from transferable stock.
  /// Only meaningful under partial transferability; empty means all zero.
  std::vector<double> carried;

  std::size_t windows() const { return identities.size(); }
};

struct OracleScenario {
  Count s = 0;
  Count T = 1;
  ResourceSpec spec;
  InfluenceFunction f;
  CoordinationModel coord = CoordinationModel::zero();

  static OracleScenario make(ResourceSpec spec, Count s, Count T,
                             CoordinationModel coord = CoordinationModel::zero()) {
    validate(spec);
    OracleScenario sc;
    sc.s = s;
    sc.T = T;
    sc.f = InfluenceFunction(spec);
    sc.spec = std::move(spec);
    sc.coord = std::move(coord);
    return sc;
  }

  /// Per-window influence the adversary must reach: s * f(r_min).
  double target() const { return static_cast<double>(s) * f.unit_weight(); }
};

struct OracleGrid {
  double step = 0.5;
  double max_allocation = 1.0;
  Count max_identities = 3;
  std::uint64_t plan_ceiling = 10'000'000;
};

/// Multiples of r_min/2 in [0, max(tau, s * r_min)], at most s + 2 identities
/// per window.
inline OracleGrid default_grid(const OracleScenario& sc, std::optional<double> step = std::nullopt,
                               std::uint64_t ceiling = 10'000'000) {
  OracleGrid g;
  g.step = step.value_or(sc.spec.r_min / 2.0);
  if (!(g.step > 0.0)) throw std::invalid_argument("grid step must be positive");
  g.max_allocation = std::max(sc.spec.tau.value_or(0.0), static_cast<double>(sc.s) * sc.spec.r_min);
  g.max_identities = sc.s + 2;
  g.plan_ceiling = ceiling;
  return g;
}

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  double min_cost = 0.0;
  AllocationPlan witness;
  std::uint64_t plans_examined = 0;
  OracleGrid grid;
};

namespace detail {

constexpr double kOracleTol = 1e-9;

inline bool approx_ge(double a, double b) { return a >= b - kOracleTol * std::max(1.0, std::abs(b)); }
inline bool approx_le(double a, double b) { return approx_ge(b, a); }
inline bool approx_eq(double a, double b) { return approx_ge(a, b) && approx_le(a, b); }

}  // namespace detail

/// W_A(t) >= s * W_unit in every window, plus the carry-over rules of the
/// spec's semantics. Sub-threshold allocations are permitted but inactive.
inline bool plan_feasible(const AllocationPlan& plan, const OracleScenario& sc) {
  using detail::approx_eq;
  using detail::approx_ge;
  using detail::approx_le;
  const auto sem = plan_semantics(sc.spec);
  const std::size_t T = plan.windows();
  if (T != sc.T || plan.acquisitions.size() != T) return false;
  if (!plan.carried.empty() && plan.carried.size() != T) return false;

  std::vector<double> demand(T, 0.0);
  for (std::size_t t = 0; t < T; ++t) {
    double influence = 0.0;
    for (double r : plan.identities[t]) {
      if (!(r >= 0.0) || !std::isfinite(r)) return false;
      if (sc.spec.tau && !approx_le(r, *sc.spec.tau)) return false;
      if (approx_ge(r, sc.spec.r_min)) influence += sc.f(r);
      demand[t] += r;
    }
    if (!approx_ge(influence, sc.target())) return false;
    if (!(plan.acquisitions[t] >= 0.0)) return false;
  }

  auto carried = [&plan](std::size_t t) { return plan.carried.empty() ? 0.0 : plan.carried[t]; };
  if (sem != PlanSemantics::PartialTransfer) {
    for (std::size_t t = 0; t < T; ++t)
      if (carried(t) != 0.0) return false;
  }

  switch (sem) {
    case PlanSemantics::WindowLocal:
      for (std::size_t t = 0; t < T; ++t)
        if (!approx_eq(plan.acquisitions[t], demand[t])) return false;
      return true;
    case PlanSemantics::Stock: {
      double held = 0.0;
      for (std::size_t t = 0; t < T; ++t) {
        held += plan.acquisitions[t];
        if (!approx_ge(held, demand[t])) return false;
      }
      return true;
    }
    case PlanSemantics::BoundedReuse: {
      const std::size_t k = *sc.spec.reuse_horizon();
      for (std::size_t t = 0; t < T; ++t) {
        double live = 0.0;
        for (std::size_t u = (t + 1 >= k ? t + 1 - k : 0); u <= t; ++u) live += plan.acquisitions[u];
        if (!approx_ge(live, demand[t])) return false;
      }
      return true;
    }
    case PlanSemantics::PartialTransfer: {
      const double alpha = *sc.spec.alpha();
      double stock = 0.0;
      for (std::size_t t = 0; t < T; ++t) {
        const double draw = carried(t);
        if (!(draw >= 0.0) || !approx_le(draw, alpha * demand[t]) || !approx_le(draw, demand[t])) return false;
        const double flow = demand[t] - draw;
        const double bought = plan.acquisitions[t] - flow;
        if (!approx_ge(bought, 0.0)) return false;
        stock += bought;
        if (!approx_ge(stock, draw)) return false;
      }
      return true;
    }
  }
  return false;
}

/// Sum of acquisition events plus the environmental coordination term.
inline double plan_cost(const AllocationPlan& plan, const OracleScenario& sc) {
  double total = 0.0;
  for (double a : plan.acquisitions) total += a;
  return total + sc.coord(sc.s, sc.T);
}

namespace detail {

class PlanCounter {
 public:
  explicit PlanCounter(std::uint64_t ceiling) : ceiling_(ceiling) {}
  void bump(std::uint64_t n = 1) {
    count_ += n;
    if (count_ > ceiling_)
      throw BudgetExceeded("oracle enumeration exceeded the plan-count ceiling of " + std::to_string(ceiling_));
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t ceiling_;
  std::uint64_t count_ = 0;
};

/// One window's allocation, as nonincreasing grid levels (value = level*step).
struct WindowPattern {
  std::vector<int> levels;
  int demand = 0;
  int active = 0;
};

/// Fewer active identities first, then the lexicographically smaller vector.
inline bool preferred(const WindowPattern& a, const WindowPattern& b) {
  if (a.active != b.active) return a.active < b.active;
  return a.levels < b.levels;
}

/// Feasible single-window patterns, best representative per demand.
inline std::map<int, WindowPattern> enumerate_patterns(const OracleScenario& sc, const OracleGrid& grid,
                                                       PlanCounter& counter) {
  const int top = static_cast<int>(std::floor(grid.max_allocation / grid.step + kOracleTol));
  const int slots = static_cast<int>(grid.max_identities);
  const double target = sc.target();

  std::vector<bool> level_ok(top + 1, true), level_active(top + 1, false);
  std::vector<double> level_influence(top + 1, 0.0);
  for (int l = 1; l <= top; ++l) {
    const double v = l * grid.step;
    level_ok[l] = !sc.spec.tau || approx_le(v, *sc.spec.tau);
    level_active[l] = approx_ge(v, sc.spec.r_min);
    level_influence[l] = level_active[l] ? sc.f(v) : 0.0;
  }

  std::map<int, WindowPattern> best;
  WindowPattern cur;
  auto consider = [&](double influence, bool ok) {
    counter.bump();
    if (!ok || !approx_ge(influence, target)) return;
    auto it = best.find(cur.demand);
    if (it == best.end()) best.emplace(cur.demand, cur);
    else if (preferred(cur, it->second)) it->second = cur;
  };
  // Depth-first over nonincreasing level sequences.
  auto recurse = [&](auto&& self, int max_level, double influence, bool ok) -> void {
    consider(influence, ok);
    if (static_cast<int>(cur.levels.size()) == slots) return;
    for (int l = max_level; l >= 1; --l) {
      cur.levels.push_back(l);
      cur.demand += l;
      cur.active += level_active[l] ? 1 : 0;
      self(self, l, influence + level_influence[l], ok && level_ok[l]);
      cur.active -= level_active[l] ? 1 : 0;
      cur.demand -= l;
      cur.levels.pop_back();
    }
  };
  recurse(recurse, top, 0.0, true);
  return best;
}

struct SearchNode {
  long long cost = 0;
  std::uint64_t prev = 0;
  int acquire = 0;
  int demand = 0;  // key into the pattern table
  int carried = 0;
};

}  // namespace detail

inline OracleResult min_cost(const OracleScenario& sc, const OracleGrid& grid) {
  using namespace detail;
  validate(sc.spec);
  if (sc.T == 0) throw std::invalid_argument("oracle scenario needs at least one window");
  const auto sem = plan_semantics(sc.spec);

  OracleResult result;
  result.grid = grid;
  if (sc.s == 0) {
    result.witness.identities.assign(sc.T, {});
    result.witness.acquisitions.assign(sc.T, 0.0);
    result.min_cost = plan_cost(result.witness, sc);
    return result;
  }

  PlanCounter counter(grid.plan_ceiling);
  const auto patterns = enumerate_patterns(sc, grid, counter);
  if (patterns.empty())
    throw std::domain_error("no single-window allocation on the grid reaches the influence target");
  const int d_max = patterns.rbegin()->first;

  // within[x]: preferred pattern whose demand fits into x units of held stock.
  std::vector<int> within(d_max + 1, -1);
  for (int x = 0; x <= d_max; ++x) {
    if (x > 0) within[x] = within[x - 1];
    auto it = patterns.find(x);
    if (it != patterns.end() && (within[x] < 0 || preferred(it->second, patterns.at(within[x])))) within[x] = x;
  }

  // flow_at[x] under partial transfer: cheapest identity-bound flow given x
  // units of transferable stock, with the pattern and draw that realize it.
  struct FlowChoice {
    int flow = -1;
    int demand = 0;
    int draw = 0;
  };
  std::vector<FlowChoice> flow_at;
  if (sem == PlanSemantics::PartialTransfer) {
    const double alpha = *sc.spec.alpha();
    flow_at.resize(d_max + 1);
    for (int x = 0; x <= d_max; ++x) {
      for (const auto& [demand, pattern] : patterns) {
        const int max_draw = std::min(x, static_cast<int>(std::floor(alpha * demand + kOracleTol)));
        for (int draw = 0; draw <= max_draw; ++draw) {
          counter.bump();
          const int flow = demand - draw;
          auto& best = flow_at[x];
          if (best.flow < 0 || flow < best.flow ||
              (flow == best.flow && preferred(pattern, patterns.at(best.demand)))) {
            best = {flow, demand, draw};
          }
        }
      }
    }
  }

  // Unexpired purchases under bounded reuse, packed base (d_max + 1).
  const std::size_t horizon =
      sem == PlanSemantics::BoundedReuse ? std::min<std::size_t>(*sc.spec.reuse_horizon(), sc.T) : 1;
  const std::uint64_t base = static_cast<std::uint64_t>(d_max) + 1;
  if (horizon > 1) {
    long double span = 1;
    for (std::size_t i = 1; i < horizon; ++i) span *= base;
    if (span > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / base))
      throw BudgetExceeded("bounded-reuse state space does not fit the oracle's state encoding");
  }
  auto unpack = [&](std::uint64_t key) {
    std::vector<int> v(horizon - 1);
    for (auto& x : v) {
      x = static_cast<int>(key % base);
      key /= base;
    }
    return v;  // v[0] is the most recent purchase
  };
  auto pack = [&](const std::vector<int>& v) {
    std::uint64_t key = 0;
    for (std::size_t i = v.size(); i-- > 0;) key = key * base + static_cast<std::uint64_t>(v[i]);
    return key;
  };

  std::vector<std::unordered_map<std::uint64_t, SearchNode>> layers(sc.T + 1);
  layers[0].emplace(0, SearchNode{});
  for (std::size_t t = 1; t <= sc.T; ++t) {
    auto& next = layers[t];
    std::vector<std::uint64_t> keys;
    keys.reserve(layers[t - 1].size());
    for (const auto& [key, _] : layers[t - 1]) keys.push_back(key);
    std::sort(keys.begin(), keys.end());

    auto relax = [&next](std::uint64_t key, const SearchNode& node) {
      auto [it, inserted] = next.try_emplace(key, node);
      if (!inserted && node.cost < it->second.cost) it->second = node;
    };

    for (std::uint64_t key : keys) {
      const long long cost = layers[t - 1].at(key).cost;
      switch (sem) {
        case PlanSemantics::WindowLocal:
          for (const auto& [demand, pattern] : patterns) {
            counter.bump();
            relax(0, {cost + demand, key, demand, demand, 0});
          }
          break;
        case PlanSemantics::Stock: {
          const int held = static_cast<int>(key);
          for (int a = 0; held + a <= d_max; ++a) {
            counter.bump();
            const int now = held + a;
            if (within[now] < 0) continue;
            relax(static_cast<std::uint64_t>(now), {cost + a, key, a, within[now], 0});
          }
          break;
        }
        case PlanSemantics::BoundedReuse: {
          const auto recent = unpack(key);
          int carried_live = 0;
          for (int x : recent) carried_live += x;
          std::vector<int> shifted(horizon - 1);
          for (int a = 0; a <= d_max; ++a) {
            counter.bump();
            const int live = std::min(carried_live + a, d_max);
            if (within[live] < 0) continue;
            if (!shifted.empty()) {
              shifted[0] = a;
              for (std::size_t i = 1; i < shifted.size(); ++i) shifted[i] = recent[i - 1];
            }
            relax(pack(shifted), {cost + a, key, a, within[live], 0});
          }
          break;
        }
        case PlanSemantics::PartialTransfer: {
          const int held = static_cast<int>(key);
          for (int a = 0; held + a <= d_max; ++a) {
            counter.bump();
            const int now = held + a;
            const auto& choice = flow_at[now];
            if (choice.flow < 0) continue;
            relax(static_cast<std::uint64_t>(now),
                  {cost + a + choice.flow, key, a + choice.flow, choice.demand, choice.draw});
          }
          break;
        }
      }
    }
    if (next.empty()) throw std::domain_error("no feasible allocation plan on the grid");
  }

  // Cheapest final state; smallest key on ties.
  std::uint64_t best_key = 0;
  long long best_cost = std::numeric_limits<long long>::max();
  for (const auto& [key, node] : layers[sc.T]) {
    if (node.cost < best_cost || (node.cost == best_cost && key < best_key)) {
      best_cost = node.cost;
      best_key = key;
    }
  }

  AllocationPlan& w = result.witness;
  w.identities.assign(sc.T, {});
  w.acquisitions.assign(sc.T, 0.0);
  if (sem == PlanSemantics::PartialTransfer) w.carried.assign(sc.T, 0.0);
  std::uint64_t key = best_key;
  for (std::size_t t = sc.T; t >= 1; --t) {
    const SearchNode& node = layers[t].at(key);
    for (int level : patterns.at(node.demand).levels) w.identities[t - 1].push_back(level * grid.step);
    w.acquisitions[t - 1] = node.acquire * grid.step;
    if (!w.carried.empty()) w.carried[t - 1] = node.carried * grid.step;
    key = node.prev;
  }

  result.plans_examined = counter.count();
  result.min_cost = static_cast<double>(best_cost) * grid.step + sc.coord(sc.s, sc.T);
  return result;
}

inline OracleResult min_cost(const OracleScenario& sc) { return min_cost(sc, default_grid(sc)); }

struct VerificationAssertion {
  std::string name;
  std::string relation;  // "<=", ">=", "=="
  double actual = 0.0;
  double bound = 0.0;
  bool passed = false;
};

struct VerificationReport {
  ResourceClass resource_class = ResourceClass::Other;
  std::vector<VerificationAssertion> assertions;

  bool passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.passed; });
  }
};

/// Checks an oracle result against the bound its resource class must obey.
/// Failures are report entries, never exceptions.
inline VerificationReport verify_bounds(const OracleResult& result, const OracleScenario& sc) {
  using detail::approx_eq;
  using detail::approx_ge;
  using detail::approx_le;
  VerificationReport report;
  report.resource_class = classify(sc.spec).resource_class;
  auto check = [&report](std::string name, std::string relation, double actual, double bound) {
    bool ok = relation == "<=" ? approx_le(actual, bound)
              : relation == ">=" ? approx_ge(actual, bound)
                                 : approx_eq(actual, bound);
    report.assertions.push_back({std::move(name), std::move(relation), actual, bound, ok});
  };

  const double s = static_cast<double>(sc.s), T = static_cast<double>(sc.T), r = sc.spec.r_min;
  const double h = sc.coord(sc.s, sc.T);
  const double c = result.min_cost;

  check("witness feasible", "==", plan_feasible(result.witness, sc) ? 1.0 : 0.0, 1.0);
  check("witness cost equals min_cost", "==", plan_cost(result.witness, sc), c);

  switch (report.resource_class) {
    case ResourceClass::Parallelizable:
      check("stock-only upper bound s*r_min + h", "<=", c, s * r + h);
      check("activation floor s*r_min + h", ">=", c, s * r + h);
      break;
    case ResourceClass::ThroughputBounded:
      check("linear lower bound s*T*r_min + h", ">=", c, s * T * r + h);
      check("tight allocation attains s*T*r_min + h", "==", c, s * T * r + h);
      break;
    case ResourceClass::Intermediate:
      if (auto a = sc.spec.alpha()) check("partial-transfer bound (1-alpha)*s*T*r_min + h", ">=", c, (1.0 - *a) * s * T * r + h);
      if (auto k = sc.spec.reuse_horizon()) {
        const double renewals = std::ceil(T / static_cast<double>(*k));
        check("bounded-reuse bound s*ceil(T/k)*r_min + h", ">=", c, s * renewals * r + h);
      }
      break;
    case ResourceClass::Other:
      check("activation floor s*r_min + h", ">=", c, s * r + h);
      break;
  }
  return report;
}

}  // namespace influence_cost
