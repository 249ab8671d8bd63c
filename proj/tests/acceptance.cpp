// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "influence_cost/influence_cost.hpp"
#include "influence_cost_cli.hpp"
#include "reference_values.hpp"

using namespace influence_cost;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 = no limit
  std::function<Verdict()> body;
};

std::string str(double v) { return format_number(v); }

Verdict printed_crossover() {
  Verdict v;
  std::ostringstream out, err;
  v.require(cli::dispatch({"crossover", "--table"}, out, err) == 0, "crossover --table failed: " + err.str());
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  v.require(line == "T,r_min=0.5,r_min=1.0,r_min=2.0", "unexpected header " + line);
  std::size_t row = 0, cells = 0;
  while (std::getline(in, line) && row < reference::kPrintedCrossover.size()) {
    std::istringstream fields(line);
    std::string cell;
    std::getline(fields, cell, ',');  // T
    for (std::size_t j = 0; j < 3 && std::getline(fields, cell, ','); ++j, ++cells) {
      const double got = std::stod(cell), want = reference::kPrintedCrossover[row][j];
      v.require(std::abs(got - want) <= reference::kCrossoverTolerance,
                "row " + std::to_string(row) + " col " + std::to_string(j) + ": " + cell + " vs " + str(want));
    }
    ++row;
  }
  v.require(cells == 15, std::to_string(cells) + " cells compared, expected 15");
  return v;
}

Verdict eth() {
  Verdict v;
  const auto sc = eth_scenario();
  for (const auto& ser : run_calibration(sc, LawSelector::Both)) {
    if (ser.tier != "lido") continue;
    for (const auto& p : ser.points) {
      if (ser.law == "par") v.require(p.total == 9.6e6, "par total " + str(p.total) + " at T=" + str(p.T));
      if (ser.law == "bnd" && p.T == 1000) {
        v.require(p.total == 9.6e9, "bnd total " + str(p.total));
        const double ratio = p.total / *sc.supply_reference;
        v.require(ratio >= 75.0 && ratio <= 85.0, "supply ratio " + str(ratio));
      }
    }
  }
  return v;
}

Verdict btc() {
  Verdict v;
  const auto sc = btc_tiers();
  const std::vector<Count> expected{1650, 1550, 1200, 1150};
  for (std::size_t i = 0; i < expected.size(); ++i)
    v.require(sc.tiers[i].s == expected[i], "tier " + sc.tiers[i].label + " = " + str(sc.tiers[i].s));
  for (const auto& coord : {CoordinationModel::zero(), CoordinationModel::linear_sum()})
    for (const auto& ser : run_calibration(sc, LawSelector::Parallelizable, coord))
      for (std::size_t i = 1; i < ser.points.size(); ++i)
        v.require(*ser.points[i].normalized < *ser.points[i - 1].normalized,
                  ser.tier + " not strictly decreasing at T=" + str(ser.points[i].T));
  return v;
}

Verdict fig3() {
  Verdict v;
  const auto t = fig3_experiment(200);
  v.require(t.s_values == std::vector<Count>{400, 700, 1000}, "s values");
  v.require(t.m_values.front() == 10 && t.m_values.back() == 200, "m range");
  for (std::size_t i = 0; i < t.m_values.size(); ++i) {
    const double m = static_cast<double>(t.m_values[i]), want = m / (m + 200.0);
    for (double share : t.shares[i])
      v.require(std::memcmp(&share, &want, sizeof share) == 0, "m=" + str(m) + " share " + str(share));
  }
  return v;
}

Verdict from_check(const CheckResult& r, std::uint64_t expected_cases) {
  Verdict v;
  v.require(r.passed, r.detail);
  if (expected_cases)
    v.require(r.cases == expected_cases, std::to_string(r.cases) + " cases, expected " + std::to_string(expected_cases));
  return v;
}

Verdict hybrid_floor() {
  Verdict v;
  for (const auto& spec : {fig1_sweep(), fig2_sweep()})
    for (const auto& row : sweep(spec, 4))
      v.require(row.hybrid.total >= row.r_min * static_cast<double>(row.s) * static_cast<double>(row.T),
                "s=" + str(row.s) + " T=" + str(row.T) + " r_min=" + str(row.r_min));
  return v;
}

Verdict normalized_regimes() {
  Verdict v;
  const auto fig1 = sweep(fig1_sweep(), 4);
  for (std::size_t i = 1; i < fig1.size(); ++i)
    v.require(*fig1[i].par.normalized < *fig1[i - 1].par.normalized, "fig1 par not decreasing at s=" + str(fig1[i].s));
  const auto fig2 = sweep(fig2_sweep(), 4);
  for (std::size_t i = 1; i < fig2.size(); ++i)
    if (fig2[i].r_min == fig2[i - 1].r_min)
      v.require(*fig2[i].par.normalized < *fig2[i - 1].par.normalized, "fig2 par not decreasing at T=" + str(fig2[i].T));
  for (const auto* rows : {&fig1, &fig2})
    for (const auto& row : *rows)
      v.require(*row.bnd.normalized == row.r_min, "bnd ratio " + str(*row.bnd.normalized) + " != r_min");
  for (const auto& row : fig1)
    if (row.s == 1000 && row.T == 100)
      v.require(*row.par.normalized < 0.02, "par C/sT at s=1000, T=100 is " + str(*row.par.normalized) +
                                                " (not < 0.02)");
  return v;
}

Verdict classification() {
  Verdict v;
  for (unsigned bits = 0; bits < 64; ++bits) {
    ResourceSpec s;
    s.divisible = bits & 1;
    s.additive_influence = bits & 2;
    s.reuse = static_cast<bool>(bits & 4);
    s.transfer = static_cast<bool>(bits & 8);
    s.throughput_bounded = bits & 16;
    if (bits & 32) s.tau = 1.0;
    v.require(!(is_parallelizable(s) && is_throughput_bounded(s)), "flags " + std::to_string(bits));
  }
  for (const auto& spec : taxonomy_presets())
    v.require(classify(spec).resource_class == expected_preset_class(spec.name), spec.name);
  v.require(taxonomy_presets().size() == 7, "preset count");
  return v;
}

}  // namespace

int main() {
  const std::uint64_t grid_cases = oracle_grid_points().size() * oracle_equivalence_specs().size();
  const std::vector<Criterion> criteria{
      {1, "crossover table matches printed s* (abs tol 0.05)", 1.0, printed_crossover},
      {2, "ETH calibration totals and supply ratio", 1.0, eth},
      {3, "BTC tiers and decreasing parallelizable ratios", 1.0, btc},
      {4, "non-amplification columns identical to m/(m+200)", 1.0, fig3},
      {5, "oracle equals closed-form laws on 144 instances", 60.0,
       [&] { return from_check(check_oracle_equivalence(), grid_cases); }},
      {6, "oracle marginal separation r_min vs r_min*T", 0.0,
       [&] { return from_check(check_marginal_separation(), grid_cases); }},
      {7, "intermediate regimes: bounds and endpoints", 0.0,
       [] {
         Verdict v = from_check(check_partial_transfer(), 0);
         const Verdict reuse = from_check(check_bounded_reuse(), 0);
         v.require(reuse.passed, reuse.detail);
         return v;
       }},
      {8, "hybrid floor r_min*s*T over the sweep grids", 0.0, hybrid_floor},
      {9, "normalized ratios: par decreasing and < 0.02 at (1000, 100); bnd = r_min", 0.0, normalized_regimes},
      {10, "classification exclusion and taxonomy presets", 1.0, classification},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s)
      v.require(false, "took " + str(secs) + " s, limit " + str(c.time_limit_s) + " s");
    if (!v.passed) ++failed;
    std::printf("%s [%2d] %s (%.3f s)%s%s\n", v.passed ? "PASS" : "FAIL", c.id, c.title, secs,
                v.passed ? "" : ": ", v.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed;
}
