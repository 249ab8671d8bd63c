#pragma once

// JSON and CSV renderings of reports, traces and tables.

#include <string>
#include <vector>

#include "calibration.hpp"
#include "cost_engine.hpp"
#include "format.hpp"
#include "resource_io.hpp"
#include "strategy_oracle.hpp"
#include "sweep.hpp"
#include "window_sim.hpp"

namespace influence_cost {

namespace detail {
inline Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }
}  // namespace detail

inline Json to_json(const CostReport& r) {
  return Json{{"s", r.s},
              {"T", r.T},
              {"total", r.total},
              {"stock", r.stock},
              {"flow", r.flow},
              {"coordination", r.coordination},
              {"marginal", r.marginal},
              {"normalized", detail::optional_number(r.normalized)}};
}

inline CsvTable cost_report_csv(const std::vector<CostReport>& reports) {
  CsvTable table({"s", "T", "total", "stock", "flow", "coordination", "marginal", "normalized"});
  for (const auto& r : reports)
    table.add_row({format_number(r.s), format_number(r.T), format_number(r.total), format_number(r.stock),
                   format_number(r.flow), format_number(r.coordination), format_number(r.marginal),
                   format_number(r.normalized)});
  return table;
}

inline Json to_json(const ResourceClassification& c) {
  return Json{{"class", std::string(to_string(c.resource_class))}, {"reasons", c.reasons}};
}

inline Json to_json(const AllocationPlan& p) {
  Json j{{"windows", p.windows()}, {"identities", p.identities}, {"acquisitions", p.acquisitions}};
  if (!p.carried.empty()) j["carried"] = p.carried;
  return j;
}

inline Json to_json(const OracleGrid& g) {
  return Json{{"step", g.step},
              {"max_allocation", g.max_allocation},
              {"max_identities", g.max_identities},
              {"plan_ceiling", g.plan_ceiling}};
}

inline Json to_json(const OracleResult& r) {
  return Json{{"min_cost", r.min_cost},
              {"plans_examined", r.plans_examined},
              {"grid", to_json(r.grid)},
              {"witness", to_json(r.witness)}};
}

inline Json to_json(const VerificationReport& v) {
  Json arr = Json::array();
  for (const auto& a : v.assertions)
    arr.push_back(Json{{"name", a.name}, {"relation", a.relation}, {"actual", a.actual}, {"bound", a.bound},
                       {"passed", a.passed}});
  return Json{{"class", std::string(to_string(v.resource_class))}, {"passed", v.passed()}, {"assertions", arr}};
}

inline CsvTable sim_trace_csv(const SimTrace& trace) {
  CsvTable table({"t", "active", "adversarial_influence", "total_influence", "share", "expenditure",
                  "cumulative_cost"});
  double cumulative = 0.0;
  for (const auto& w : trace.per_window) {
    cumulative += w.expenditure;
    table.add_row({format_number(w.t), format_number(w.active), format_number(w.adversarial_influence),
                   format_number(w.total_influence), format_number(w.share), format_number(w.expenditure),
                   format_number(cumulative)});
  }
  return table;
}

inline Json to_json(const SimTrace& trace) {
  Json windows = Json::array();
  for (const auto& w : trace.per_window)
    windows.push_back(Json{{"t", w.t},
                           {"active", w.active},
                           {"adversarial_influence", w.adversarial_influence},
                           {"total_influence", w.total_influence},
                           {"share", w.share},
                           {"expenditure", w.expenditure}});
  return Json{{"per_window", windows}, {"total_cost", trace.total_cost}};
}

/// Header m, share_s<value>... ; one row per m.
inline CsvTable non_amplification_csv(const NonAmplificationTable& t) {
  std::vector<std::string> header{"m"};
  for (Count s : t.s_values) header.push_back("share_s" + std::to_string(s));
  CsvTable table(std::move(header));
  for (std::size_t i = 0; i < t.m_values.size(); ++i) {
    std::vector<std::string> row{format_number(t.m_values[i])};
    for (double share : t.shares[i]) row.push_back(format_number(share));
    table.add_row(std::move(row));
  }
  return table;
}

inline Json to_json(const NonAmplificationTable& t) {
  return Json{{"m", t.m_values}, {"s", t.s_values}, {"shares", t.shares}, {"warnings", t.warnings}};
}

/// Header T, r_min=0.5, r_min=1.0, r_min=2.0; empty cell when undefined.
inline CsvTable crossover_csv(const std::vector<CrossoverRow>& rows) {
  CsvTable table({"T", "r_min=0.5", "r_min=1.0", "r_min=2.0"});
  for (const auto& row : rows) {
    std::vector<std::string> cells{format_number(row.T)};
    for (const auto& v : row.s_star) cells.push_back(format_number(v));
    table.add_row(std::move(cells));
  }
  return table;
}

inline Json to_json(const std::vector<CrossoverRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j{{"T", row.T}};
    for (std::size_t i = 0; i < row.s_star.size(); ++i)
      j["r_min=" + format_number(crossover_r_min_values()[i])] = detail::optional_number(row.s_star[i]);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline Json to_json(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"s", r.s},
                       {"T", r.T},
                       {"r_min", r.r_min},
                       {"coord", std::string(to_string(r.coord))},
                       {"par", to_json(r.par)},
                       {"bnd", to_json(r.bnd)},
                       {"hybrid", to_json(r.hybrid)}});
  return arr;
}

}  // namespace influence_cost
