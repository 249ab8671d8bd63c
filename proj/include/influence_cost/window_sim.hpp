#pragma once

// Deterministic discrete-window simulation of an adversary against a fixed
// population of unit-weight honest validators.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cost_engine.hpp"
#include "resource_model.hpp"

namespace influence_cost {

/// min(m, s) / (min(m, s) + n)
inline double influence_share(Count m, Count s, Count n) {
  const Count active = std::min(m, s);
  if (active + n == 0) throw std::invalid_argument("influence share is undefined with no participants at all");
  return static_cast<double>(active) / (static_cast<double>(active) + static_cast<double>(n));
}

struct ScenarioConfig {
  Count n_honest = 200;
  Count m = 0;  // adversarial channels
  Count s = 0;  // adversarial identities
  Count T = 1;
  ResourceSpec spec;
};

struct WindowRecord {
  Count t = 0;  // 1-based
  Count active = 0;
  double adversarial_influence = 0.0;
  double total_influence = 0.0;
  double share = 0.0;
  double expenditure = 0.0;
};

struct SimTrace {
  std::vector<WindowRecord> per_window;
  double total_cost = 0.0;
};

namespace detail {

/// Resource held by the adversary: amount, and the last window it may be used in.
struct Holding {
  double amount = 0.0;
  Count expires_after = 0;
};

}  // namespace detail

inline SimTrace run(const ScenarioConfig& config) {
  validate(config.spec);
  if (config.T == 0) throw std::invalid_argument("simulation needs at least one window");
  const ResourceSpec& spec = config.spec;
  if (spec.partial_properties)
    throw std::invalid_argument("resource '" + spec.name + "' has model-dependent semantics; cannot simulate");
  if (spec.throughput_bounded && !spec.tau)
    throw std::invalid_argument("throughput-bounded resource needs a rate limit tau");
  if (spec.temporally_reusable() && !spec.identity_transferable() && !spec.alpha())
    throw std::invalid_argument("reusable identity-bound stock is not simulated");

  const InfluenceFunction f(spec);
  const double r_min = spec.r_min;
  const double honest = static_cast<double>(config.n_honest) * f.unit_weight();
  const bool channel_limited = is_throughput_bounded(spec);

  SimTrace trace;
  std::vector<detail::Holding> stock;  // transferable holdings carried across windows

  for (Count t = 1; t <= config.T; ++t) {
    WindowRecord rec;
    rec.t = t;
    std::erase_if(stock, [t](const detail::Holding& h) { return h.expires_after < t; });

    if (channel_limited) {
      // Each channel carries at most one identity per window; identities
      // left without a channel stay inactive.
      Count next_identity = 0;
      for (Count channel = 0; channel < config.m && next_identity < config.s; ++channel, ++next_identity) {
        rec.expenditure += r_min;
        rec.adversarial_influence += f(r_min);
        ++rec.active;
      }
    } else if (config.s > 0) {
      const double needed = static_cast<double>(config.s) * r_min;
      double transferable_needed = needed;
      double flow = 0.0;
      if (auto alpha = spec.alpha()) {
        transferable_needed = *alpha * needed;
        flow = needed - transferable_needed;
      } else if (!spec.temporally_reusable() && !spec.reuse_horizon()) {
        transferable_needed = 0.0;
        flow = needed;
      }
      double held = 0.0;
      for (const auto& h : stock) held += h.amount;
      if (held < transferable_needed) {
        const Count lifetime = spec.reuse_horizon() ? *spec.reuse_horizon() : config.T;
        stock.push_back({transferable_needed - held, t + lifetime - 1});
        rec.expenditure += transferable_needed - held;
      }
      rec.expenditure += flow;
      // Aggregate resource partitioned evenly across the s identities.
      const double per_identity = needed / static_cast<double>(config.s);
      for (Count i = 0; i < config.s; ++i) rec.adversarial_influence += f(per_identity);
      rec.active = config.s;
    }

    rec.total_influence = rec.adversarial_influence + honest;
    rec.share = rec.total_influence > 0.0 ? rec.adversarial_influence / rec.total_influence : 0.0;
    trace.total_cost += rec.expenditure;
    trace.per_window.push_back(rec);
  }
  return trace;
}

struct NonAmplificationTable {
  std::vector<Count> m_values;
  std::vector<Count> s_values;
  /// shares[i][j] for m_values[i], s_values[j]
  std::vector<std::vector<double>> shares;
  std::vector<std::string> warnings;
};

inline NonAmplificationTable non_amplification_experiment(const std::vector<Count>& m_range,
                                                          const std::vector<Count>& s_values, Count n) {
  if (m_range.empty() || s_values.empty()) throw std::invalid_argument("m and s ranges must be nonempty");
  NonAmplificationTable table{m_range, s_values, {}, {}};
  const Count m_max = *std::max_element(m_range.begin(), m_range.end());
  for (Count s : s_values)
    if (s <= m_max)
      table.warnings.push_back("s=" + std::to_string(s) + " does not exceed max m=" + std::to_string(m_max) +
                               "; its column is capped by identity count");
  for (Count m : m_range) {
    std::vector<double> row;
    for (Count s : s_values) row.push_back(influence_share(m, s, n));
    table.shares.push_back(std::move(row));
  }
  return table;
}

/// m = 10, 20, ..., 200 against s in {400, 700, 1000} and n = 200.
inline NonAmplificationTable fig3_experiment(Count n = 200) {
  std::vector<Count> m;
  for (Count v = 10; v <= 200; v += 10) m.push_back(v);
  return non_amplification_experiment(m, {400, 700, 1000}, n);
}

}  // namespace influence_cost
