#pragma once

// Closed-form adversarial cost laws C(s, T) and the quantities derived from
// them: marginal cost, crossover, intermediate-regime bounds and hybrid
// composition. All amounts are in resource units.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resource_model.hpp"

namespace influence_cost {

using Count = std::uint64_t;

/// Coordination overhead h(s, T) of managing s participation units over T
/// windows.
class CoordinationModel {
 public:
  enum class Kind { Zero, LinearSum, CustomTable };
  using Table = std::map<std::pair<Count, Count>, double>;

  static CoordinationModel zero() { return CoordinationModel(Kind::Zero, {}); }
  static CoordinationModel linear_sum() { return CoordinationModel(Kind::LinearSum, {}); }
  /// Explicit h values. Lookups outside the table throw, except s = 0 or
  /// T = 0 which evaluate to 0.
  static CoordinationModel table(Table values) {
    for (const auto& [key, h] : values)
      if (!(h >= 0.0) || !std::isfinite(h)) throw std::invalid_argument("coordination overhead must be nonnegative");
    return CoordinationModel(Kind::CustomTable, std::move(values));
  }

  Kind kind() const { return kind_; }

  double operator()(Count s, Count T) const {
    if (s == 0 || T == 0) return 0.0;
    switch (kind_) {
      case Kind::Zero: return 0.0;
      case Kind::LinearSum: return static_cast<double>(s) + static_cast<double>(T);
      case Kind::CustomTable: {
        auto it = table_.find({s, T});
        if (it == table_.end())
          throw std::out_of_range("no coordination entry for s=" + std::to_string(s) + ", T=" + std::to_string(T));
        return it->second;
      }
    }
    return 0.0;
  }

 private:
  CoordinationModel(Kind kind, Table table) : kind_(kind), table_(std::move(table)) {}
  Kind kind_;
  Table table_;
};

inline std::string_view to_string(CoordinationModel::Kind k) {
  switch (k) {
    case CoordinationModel::Kind::Zero: return "zero";
    case CoordinationModel::Kind::LinearSum: return "linear";
    case CoordinationModel::Kind::CustomTable: return "table";
  }
  return "zero";
}

inline CoordinationModel coordination_from_name(std::string_view name) {
  if (name == "zero") return CoordinationModel::zero();
  if (name == "linear") return CoordinationModel::linear_sum();
  throw std::invalid_argument("unknown coordination model '" + std::string(name) + "' (expected zero|linear)");
}

struct CostReport {
  Count s = 0;
  Count T = 0;
  double total = 0.0;
  double stock = 0.0;
  double flow = 0.0;
  double coordination = 0.0;
  double marginal = 0.0;
  /// total / (s * T); absent when s * T = 0.
  std::optional<double> normalized;

  /// The report of an empty horizon or empty target: C(0, T) = C(s, 0) = 0.
  static CostReport zero(Count s, Count T) {
    CostReport r;
    r.s = s;
    r.T = T;
    if (s > 0 && T > 0) r.normalized = 0.0;
    return r;
  }
};

namespace detail {

inline void require_positive_rmin(double r_min) {
  if (!(r_min > 0.0) || !std::isfinite(r_min)) throw std::invalid_argument("r_min must be positive and finite");
}

inline CostReport finish(Count s, Count T, double stock, double flow, double coordination, double marginal) {
  CostReport r;
  r.s = s;
  r.T = T;
  r.stock = stock;
  r.flow = flow;
  r.coordination = coordination;
  r.total = stock + flow + coordination;
  r.marginal = marginal;
  r.normalized = r.total / (static_cast<double>(s) * static_cast<double>(T));
  return r;
}

inline double units(Count n) { return static_cast<double>(n); }

}  // namespace detail

/// One-time stock s * r_min plus coordination; no flow.
inline CostReport cost_parallelizable(Count s, Count T, double r_min,
                                      const CoordinationModel& coord = CoordinationModel::zero()) {
  detail::require_positive_rmin(r_min);
  if (s == 0 || T == 0) return CostReport::zero(s, T);
  const double h = coord(s, T);
  const double marginal = r_min + (h - coord(s - 1, T));
  return detail::finish(s, T, detail::units(s) * r_min, 0.0, h, marginal);
}

/// Every unit renewed every window: s * T * r_min, all of it flow.
inline CostReport cost_throughput_bounded(Count s, Count T, double r_min) {
  detail::require_positive_rmin(r_min);
  if (s == 0 || T == 0) return CostReport::zero(s, T);
  const double flow = r_min * (detail::units(s) * detail::units(T));
  return detail::finish(s, T, 0.0, flow, 0.0, r_min * detail::units(T));
}

/// Renewal every k windows: s * ceil(T / k) * r_min. Counted as stock when a
/// single acquisition covers the horizon, as flow otherwise.
inline CostReport cost_bounded_reuse(Count s, Count T, double r_min, Count k) {
  detail::require_positive_rmin(r_min);
  if (k == 0) throw std::invalid_argument("reuse horizon k must be at least 1");
  if (s == 0 || T == 0) return CostReport::zero(s, T);
  const Count renewals = (T + k - 1) / k;
  const double total = r_min * (detail::units(s) * detail::units(renewals));
  const double marginal = r_min * detail::units(renewals);
  return renewals == 1 ? detail::finish(s, T, total, 0.0, 0.0, marginal)
                       : detail::finish(s, T, 0.0, total, 0.0, marginal);
}

struct PartialTransferCost {
  /// (1 - alpha) * s * T * r_min
  double lower_bound = 0.0;
  /// Transferable share held once as stock, identity-bound share renewed
  /// every window, plus coordination.
  double model_cost = 0.0;
  CostReport report;
};

inline PartialTransferCost cost_partial_transferability(Count s, Count T, double r_min, double alpha,
                                                        const CoordinationModel& coord = CoordinationModel::zero()) {
  detail::require_positive_rmin(r_min);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  PartialTransferCost out;
  if (s == 0 || T == 0) {
    out.report = CostReport::zero(s, T);
    return out;
  }
  const double sT = detail::units(s) * detail::units(T);
  out.lower_bound = (1.0 - alpha) * sT * r_min;
  const double h = coord(s, T);
  const double stock = alpha * detail::units(s) * r_min;
  const double flow = out.lower_bound;
  const double marginal = alpha * r_min + (1.0 - alpha) * detail::units(T) * r_min + (h - coord(s - 1, T));
  out.report = detail::finish(s, T, stock, flow, h, marginal);
  out.model_cost = out.report.total;
  return out;
}

/// Additive composition of a parallelizable and a throughput-bounded
/// component evaluated at the same (s, T).
inline CostReport cost_hybrid(const CostReport& par, const CostReport& bnd) {
  if (par.s != bnd.s || par.T != bnd.T)
    throw std::invalid_argument("hybrid components were computed for different (s, T)");
  if (par.s == 0 || par.T == 0) return CostReport::zero(par.s, par.T);
  return detail::finish(par.s, par.T, par.stock + bnd.stock, par.flow + bnd.flow,
                        par.coordination + bnd.coordination, par.marginal + bnd.marginal);
}

/// A cost law as a value: evaluates C(s, T) for fixed resource parameters.
struct CostLaw {
  enum class Kind { Parallelizable, ThroughputBounded, BoundedReuse, PartialTransfer };

  Kind kind = Kind::Parallelizable;
  double r_min = 1.0;
  CoordinationModel coord = CoordinationModel::zero();
  Count k = 1;
  double alpha = 0.0;

  static CostLaw parallelizable(double r_min, CoordinationModel coord = CoordinationModel::zero()) {
    return {Kind::Parallelizable, r_min, std::move(coord), 1, 0.0};
  }
  static CostLaw throughput_bounded(double r_min) {
    return {Kind::ThroughputBounded, r_min, CoordinationModel::zero(), 1, 0.0};
  }
  static CostLaw bounded_reuse(double r_min, Count k) {
    return {Kind::BoundedReuse, r_min, CoordinationModel::zero(), k, 0.0};
  }
  static CostLaw partial_transfer(double r_min, double alpha, CoordinationModel coord = CoordinationModel::zero()) {
    return {Kind::PartialTransfer, r_min, std::move(coord), 1, alpha};
  }

  CostReport operator()(Count s, Count T) const {
    switch (kind) {
      case Kind::Parallelizable: return cost_parallelizable(s, T, r_min, coord);
      case Kind::ThroughputBounded: return cost_throughput_bounded(s, T, r_min);
      case Kind::BoundedReuse: return cost_bounded_reuse(s, T, r_min, k);
      case Kind::PartialTransfer: return cost_partial_transferability(s, T, r_min, alpha, coord).report;
    }
    throw std::logic_error("unhandled cost law");
  }
};

/// C(s, T) - C(s - 1, T), with C(0, T) = 0.
inline double marginal_cost(const CostLaw& law, Count s, Count T) {
  if (s == 0) return 0.0;
  return law(s, T).total - law(s - 1, T).total;
}

/// Identity count at which the throughput-bounded cost s*T*r_min meets the
/// parallelizable baseline s*r_min + s + T. Absent when T*r_min <= r_min + 1,
/// since then the throughput-bounded cost never overtakes.
inline std::optional<double> crossover(Count T, double r_min) {
  detail::require_positive_rmin(r_min);
  const double t = detail::units(T);
  const double denom = t * r_min - r_min - 1.0;
  if (!(denom > 0.0)) return std::nullopt;
  return t / denom;
}

struct CrossoverRow {
  Count T = 0;
  std::vector<std::optional<double>> s_star;  // one per crossover_r_min_values()
};

inline const std::vector<Count>& crossover_T_values() {
  static const std::vector<Count> v{10, 25, 50, 100, 200};
  return v;
}
inline const std::vector<double>& crossover_r_min_values() {
  static const std::vector<double> v{0.5, 1.0, 2.0};
  return v;
}

inline std::vector<CrossoverRow> crossover_table() {
  std::vector<CrossoverRow> rows;
  for (Count T : crossover_T_values()) {
    CrossoverRow row{T, {}};
    for (double r : crossover_r_min_values()) row.s_star.push_back(crossover(T, r));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Stake-weighted voting paired with channel-bound proposal submission.
struct HybridPreset {
  ResourceSpec stake;
  ResourceSpec channel;
  CoordinationModel coord = CoordinationModel::zero();

  CostReport cost(Count s, Count T) const {
    return cost_hybrid(cost_parallelizable(s, T, stake.r_min, coord), cost_throughput_bounded(s, T, channel.r_min));
  }
};

inline HybridPreset governance_preset() {
  HybridPreset p;
  p.stake = *find_preset("pos-stake");
  p.stake.name = "governance-stake";
  p.channel = channel_resource({"proposal-device", 1.0}, 1.0);
  return p;
}

}  // namespace influence_cost
