#pragma once

// Parameter sweeps over the closed-form laws. Rows are produced in a fixed
// order regardless of how many workers compute them.

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cost_engine.hpp"
#include "format.hpp"

namespace influence_cost {

struct SweepSpec {
  std::vector<Count> s;
  std::vector<Count> T;
  std::vector<double> r_min;
  std::vector<CoordinationModel::Kind> coords{CoordinationModel::Kind::LinearSum};
};

struct SweepRow {
  Count s = 0;
  Count T = 0;
  double r_min = 1.0;
  CoordinationModel::Kind coord = CoordinationModel::Kind::LinearSum;
  CostReport par;
  CostReport bnd;
  CostReport hybrid;
};

inline void validate(const SweepSpec& spec) {
  if (spec.s.empty() || spec.T.empty() || spec.r_min.empty() || spec.coords.empty())
    throw std::invalid_argument("sweep grids must be nonempty");
  for (auto k : spec.coords)
    if (k == CoordinationModel::Kind::CustomTable)
      throw std::invalid_argument("sweeps support only zero and linear coordination");
}

/// s = 1..1000 at T = 100, r_min = 1, h = s + T.
inline SweepSpec fig1_sweep() {
  SweepSpec spec;
  for (Count s = 1; s <= 1000; ++s) spec.s.push_back(s);
  spec.T = {100};
  spec.r_min = {1.0};
  return spec;
}

/// T = 1..1000 at s = 10, r_min in {0.5, 1, 2}, h = s + T.
inline SweepSpec fig2_sweep() {
  SweepSpec spec;
  spec.s = {10};
  for (Count T = 1; T <= 1000; ++T) spec.T.push_back(T);
  spec.r_min = {0.5, 1.0, 2.0};
  return spec;
}

inline SweepSpec sweep_preset(std::string_view name) {
  if (name == "fig1") return fig1_sweep();
  if (name == "fig2") return fig2_sweep();
  throw std::invalid_argument("unknown sweep preset '" + std::string(name) + "' (expected fig1|fig2)");
}

/// Grid points ordered by coordination, r_min, T, then s.
inline std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned jobs = 1) {
  validate(spec);
  std::vector<SweepRow> rows;
  for (auto coord : spec.coords)
    for (double r : spec.r_min)
      for (Count T : spec.T)
        for (Count s : spec.s) rows.push_back({s, T, r, coord, {}, {}, {}});

  auto evaluate = [](SweepRow& row) {
    const auto coord = row.coord == CoordinationModel::Kind::Zero ? CoordinationModel::zero()
                                                                  : CoordinationModel::linear_sum();
    row.par = cost_parallelizable(row.s, row.T, row.r_min, coord);
    row.bnd = cost_throughput_bounded(row.s, row.T, row.r_min);
    row.hybrid = cost_hybrid(row.par, row.bnd);
  };

  jobs = std::clamp<unsigned>(jobs, 1, 64);
  if (jobs == 1 || rows.size() < 2) {
    for (auto& row : rows) evaluate(row);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < rows.size(); i = next++) evaluate(rows[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

inline CsvTable sweep_csv(const std::vector<SweepRow>& rows) {
  CsvTable table({"s", "T", "r_min", "coord", "par_total", "par_normalized", "par_marginal", "bnd_total",
                  "bnd_normalized", "bnd_marginal", "hybrid_total", "hybrid_normalized"});
  for (const auto& r : rows) {
    table.add_row({format_number(r.s), format_number(r.T), format_number(r.r_min), std::string(to_string(r.coord)),
                   format_number(r.par.total), format_number(r.par.normalized), format_number(r.par.marginal),
                   format_number(r.bnd.total), format_number(r.bnd.normalized), format_number(r.bnd.marginal),
                   format_number(r.hybrid.total), format_number(r.hybrid.normalized)});
  }
  return table;
}

}  // namespace influence_cost
