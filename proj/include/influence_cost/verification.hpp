#pragma once

// The small-instance grid on which the brute-force oracle is compared with
// the closed-form laws, and the crossover sign property.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cost_engine.hpp"
#include "resource_model.hpp"
#include "strategy_oracle.hpp"

namespace influence_cost {

struct OracleGridPoint {
  Count s = 1;
  Count T = 1;
  double r_min = 1.0;
};

/// s, T in 1..4 and r_min in {0.5, 1, 2}.
inline std::vector<OracleGridPoint> oracle_grid_points() {
  std::vector<OracleGridPoint> out;
  for (double r : {0.5, 1.0, 2.0})
    for (Count s = 1; s <= 4; ++s)
      for (Count T = 1; T <= 4; ++T) out.push_back({s, T, r});
  return out;
}

/// Parallelizable stake, and throughput-bounded channels with tau = r_min and
/// tau = 2 r_min.
inline std::vector<ResourceSpec> oracle_equivalence_specs() {
  return {*find_preset("pos-stake"), *find_preset("device-bound"), *find_preset("rate-limited")};
}

inline ResourceSpec partial_transfer_spec(double alpha) {
  ResourceSpec spec = *find_preset("pow-hardware");
  spec.name = "partial-transfer";
  spec.transfer = PartialTransfer{alpha};
  return spec;
}

inline ResourceSpec bounded_reuse_spec(unsigned k) {
  ResourceSpec spec = *find_preset("pow-hardware");
  spec.name = "bounded-reuse";
  spec.reuse = BoundedReuse{k};
  return spec;
}

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first failure, if any

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

namespace detail {

inline double oracle_cost(const ResourceSpec& base, Count s, Count T, double r_min, std::uint64_t ceiling) {
  auto sc = OracleScenario::make(with_r_min(base, r_min), s, T);
  return min_cost(sc, default_grid(sc, std::nullopt, ceiling)).min_cost;
}

inline std::string describe(const std::string& spec, const OracleGridPoint& p, double got, double want) {
  return spec + " s=" + std::to_string(p.s) + " T=" + std::to_string(p.T) + " r_min=" + std::to_string(p.r_min) +
         ": got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace detail

/// Oracle equals s*r_min (parallelizable) or s*T*r_min (throughput-bounded)
/// exactly, and every verify_bounds report passes.
inline CheckResult check_oracle_equivalence(std::uint64_t ceiling = 10'000'000) {
  CheckResult out{"oracle equals closed-form laws", true, 0, {}};
  for (const auto& base : oracle_equivalence_specs()) {
    const bool par = is_parallelizable(base);
    for (const auto& p : oracle_grid_points()) {
      auto sc = OracleScenario::make(with_r_min(base, p.r_min), p.s, p.T);
      auto result = min_cost(sc, default_grid(sc, std::nullopt, ceiling));
      const double want = par ? cost_parallelizable(p.s, p.T, p.r_min).total
                              : cost_throughput_bounded(p.s, p.T, p.r_min).total;
      out.record(result.min_cost == want && verify_bounds(result, sc).passed(),
                 detail::describe(base.name, p, result.min_cost, want));
    }
  }
  return out;
}

/// Oracle increments C(s) - C(s-1) are r_min (parallelizable) and r_min*T
/// (throughput-bounded).
inline CheckResult check_marginal_separation(std::uint64_t ceiling = 10'000'000) {
  CheckResult out{"oracle marginal separation", true, 0, {}};
  for (const auto& base : oracle_equivalence_specs()) {
    const bool par = is_parallelizable(base);
    for (const auto& p : oracle_grid_points()) {
      const double now = detail::oracle_cost(base, p.s, p.T, p.r_min, ceiling);
      const double before = p.s == 1 ? 0.0 : detail::oracle_cost(base, p.s - 1, p.T, p.r_min, ceiling);
      const double want = par ? p.r_min : p.r_min * static_cast<double>(p.T);
      out.record(now - before == want, detail::describe(base.name, p, now - before, want));
    }
  }
  return out;
}

inline CheckResult check_partial_transfer(std::uint64_t ceiling = 10'000'000) {
  CheckResult out{"partial transferability bounds and endpoints", true, 0, {}};
  for (double alpha : {0.0, 0.5, 1.0}) {
    for (const auto& p : oracle_grid_points()) {
      auto sc = OracleScenario::make(with_r_min(partial_transfer_spec(alpha), p.r_min), p.s, p.T);
      auto result = min_cost(sc, default_grid(sc, std::nullopt, ceiling));
      const auto law = cost_partial_transferability(p.s, p.T, p.r_min, alpha);
      const std::string name = "alpha=" + std::to_string(alpha);
      out.record(verify_bounds(result, sc).passed() && result.min_cost >= law.lower_bound,
                 detail::describe(name, p, result.min_cost, law.lower_bound));
      double endpoint = law.model_cost;
      if (alpha == 0.0) endpoint = cost_throughput_bounded(p.s, p.T, p.r_min).total;
      if (alpha == 1.0) endpoint = cost_parallelizable(p.s, p.T, p.r_min).total;
      out.record(result.min_cost == endpoint, detail::describe(name, p, result.min_cost, endpoint));
    }
  }
  return out;
}

inline CheckResult check_bounded_reuse(std::uint64_t ceiling = 10'000'000) {
  CheckResult out{"bounded reuse bounds and endpoints", true, 0, {}};
  for (const auto& p : oracle_grid_points()) {
    for (Count k : {Count{1}, Count{2}, p.T}) {
      auto sc = OracleScenario::make(with_r_min(bounded_reuse_spec(static_cast<unsigned>(k)), p.r_min), p.s, p.T);
      auto result = min_cost(sc, default_grid(sc, std::nullopt, ceiling));
      const std::string name = "k=" + std::to_string(k);
      const double law = cost_bounded_reuse(p.s, p.T, p.r_min, k).total;
      out.record(verify_bounds(result, sc).passed() && result.min_cost == law,
                 detail::describe(name, p, result.min_cost, law));
      if (k == 1)
        out.record(result.min_cost == cost_throughput_bounded(p.s, p.T, p.r_min).total,
                   detail::describe(name + " (window-local endpoint)", p, result.min_cost, law));
      if (k == p.T)
        out.record(result.min_cost == cost_parallelizable(p.s, p.T, p.r_min).total,
                   detail::describe(name + " (full-reuse endpoint)", p, result.min_cost, law));
    }
  }
  return out;
}

/// Above ceil(s*), C_bnd > C_par (h = s + T); below floor(s*) the order
/// reverses. Checked for s up to 64 on every crossover table cell.
inline CheckResult check_crossover_sign() {
  CheckResult out{"crossover sign property", true, 0, {}};
  const auto coord = CoordinationModel::linear_sum();
  for (Count T : crossover_T_values()) {
    for (double r : crossover_r_min_values()) {
      const auto s_star = crossover(T, r);
      if (!s_star) continue;
      for (Count s = 1; s <= 64; ++s) {
        const double bnd = cost_throughput_bounded(s, T, r).total;
        const double par = cost_parallelizable(s, T, r, coord).total;
        const std::string what = "T=" + std::to_string(T) + " r_min=" + std::to_string(r) + " s=" + std::to_string(s);
        if (static_cast<double>(s) > std::ceil(*s_star)) out.record(bnd > par, what + ": expected C_bnd > C_par");
        if (static_cast<double>(s) < std::floor(*s_star)) out.record(bnd < par, what + ": expected C_bnd < C_par");
      }
    }
  }
  return out;
}

inline std::vector<CheckResult> verify_all(std::uint64_t ceiling = 10'000'000) {
  return {check_oracle_equivalence(ceiling), check_marginal_separation(ceiling), check_partial_transfer(ceiling),
          check_bounded_reuse(ceiling), check_crossover_sign()};
}

}  // namespace influence_cost
