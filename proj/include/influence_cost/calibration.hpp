#pragma once

// Ethereum and Bitcoin calibration scenarios and the series behind the
// calibration figure panels.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cost_engine.hpp"
#include "format.hpp"

namespace influence_cost {

struct Tier {
  std::string label;
  Count s = 0;
};

struct CalibrationScenario {
  std::string name;
  double r_min = 1.0;
  std::vector<Tier> tiers;  // descending by s
  std::vector<Count> T_range;
  std::optional<double> supply_reference;
  /// Display metadata only.
  std::string window_unit;
};

inline void validate(const CalibrationScenario& sc) {
  if (!(sc.r_min > 0.0)) throw std::invalid_argument("calibration r_min must be positive");
  if (sc.tiers.empty() || sc.T_range.empty()) throw std::invalid_argument("calibration needs tiers and a T range");
  for (std::size_t i = 0; i < sc.tiers.size(); ++i) {
    if (sc.tiers[i].s == 0) throw std::invalid_argument("tier '" + sc.tiers[i].label + "' has no identities");
    if (i > 0 && sc.tiers[i].s > sc.tiers[i - 1].s) throw std::invalid_argument("tiers must be sorted by s, descending");
  }
  for (Count T : sc.T_range)
    if (T == 0) throw std::invalid_argument("calibration T range must be positive");
}

/// Lido-scale staking at 32 ETH per validator, against a small operator.
inline CalibrationScenario eth_scenario() {
  CalibrationScenario sc;
  sc.name = "eth";
  sc.r_min = 32.0;
  sc.tiers = {{"lido", 300'000}, {"small-operator", 100}};
  sc.T_range = {1, 10, 100, 1000};
  sc.supply_reference = 1.2e8;
  sc.window_unit = "epoch (6.4 min)";
  return sc;
}

/// Network hash-power shares of the four largest pools.
inline const std::vector<std::pair<std::string, double>>& btc_pool_shares() {
  static const std::vector<std::pair<std::string, double>> shares{
      {"pool1", 0.165}, {"pool2", 0.155}, {"pool3", 0.120}, {"pool4", 0.115}};
  return shares;
}

inline constexpr Count kBtcNormalizedNetwork = 10'000;

/// Pool tiers as identity counts in a network normalized to 10,000 units,
/// plus a small-pool tier of 50.
inline CalibrationScenario btc_tiers() {
  CalibrationScenario sc;
  sc.name = "btc";
  sc.r_min = 1.0;
  for (const auto& [label, share] : btc_pool_shares())
    sc.tiers.push_back({label, static_cast<Count>(std::llround(share * static_cast<double>(kBtcNormalizedNetwork)))});
  sc.tiers.push_back({"small", 50});
  for (Count T = 1; T <= 500; T += 10) sc.T_range.push_back(T);
  sc.window_unit = "block interval";
  return sc;
}

enum class LawSelector { Parallelizable, ThroughputBounded, Both };

inline LawSelector law_selector_from_name(std::string_view name) {
  if (name == "par") return LawSelector::Parallelizable;
  if (name == "bnd") return LawSelector::ThroughputBounded;
  if (name == "both") return LawSelector::Both;
  throw std::invalid_argument("unknown law '" + std::string(name) + "' (expected par|bnd|both)");
}

struct CalibrationSeries {
  std::string tier;
  Count s = 0;
  std::string law;  // "par" or "bnd"
  std::vector<CostReport> points;  // one per T in the scenario's range
};

inline std::vector<CalibrationSeries> run_calibration(const CalibrationScenario& sc, LawSelector law,
                                                      const CoordinationModel& coord = CoordinationModel::zero()) {
  validate(sc);
  std::vector<CalibrationSeries> out;
  for (const auto& tier : sc.tiers) {
    if (law != LawSelector::ThroughputBounded) {
      CalibrationSeries series{tier.label, tier.s, "par", {}};
      for (Count T : sc.T_range) series.points.push_back(cost_parallelizable(tier.s, T, sc.r_min, coord));
      out.push_back(std::move(series));
    }
    if (law != LawSelector::Parallelizable) {
      CalibrationSeries series{tier.label, tier.s, "bnd", {}};
      for (Count T : sc.T_range) series.points.push_back(cost_throughput_bounded(tier.s, T, sc.r_min));
      out.push_back(std::move(series));
    }
  }
  return out;
}

/// Figure panels keyed by file stem. ETH yields fig4-left (totals) and
/// fig4-right (normalized); BTC yields fig5-left (normalized) and
/// fig5-right (marginal).
inline std::vector<std::pair<std::string, CsvTable>> calibration_panels(const CalibrationScenario& sc,
                                                                        const std::vector<CalibrationSeries>& series) {
  auto panel = [&series](const char* value_column, auto value_of) {
    CsvTable table({"tier", "s", "law", "T", value_column});
    for (const auto& ser : series)
      for (const auto& p : ser.points)
        table.add_row({ser.tier, format_number(ser.s), ser.law, format_number(p.T), value_of(p)});
    return table;
  };
  auto total = [](const CostReport& p) { return format_number(p.total); };
  auto normalized = [](const CostReport& p) { return format_number(p.normalized); };
  auto marginal = [](const CostReport& p) { return format_number(p.marginal); };

  std::vector<std::pair<std::string, CsvTable>> out;
  if (sc.name == "btc") {
    out.emplace_back("fig5-left", panel("normalized", normalized));
    out.emplace_back("fig5-right", panel("marginal", marginal));
  } else {
    out.emplace_back("fig4-left", panel("total", total));
    out.emplace_back("fig4-right", panel("normalized", normalized));
  }
  return out;
}

}  // namespace influence_cost
