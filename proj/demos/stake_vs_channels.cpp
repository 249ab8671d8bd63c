// Compares the cost of sustaining s influence units with staked capital
// against device-bound participation channels, and checks the smallest
// instance with the brute-force oracle.

#include <cstdio>

#include "influence_cost/influence_cost.hpp"

int main() {
  using namespace influence_cost;

  const auto coord = CoordinationModel::linear_sum();
  std::printf("%6s %6s %14s %14s %10s\n", "s", "T", "C_par", "C_bnd", "C_par/sT");
  for (Count s : {10, 100, 1000}) {
    for (Count T : {10, 100}) {
      const auto par = cost_parallelizable(s, T, 1.0, coord);
      const auto bnd = cost_throughput_bounded(s, T, 1.0);
      std::printf("%6llu %6llu %14.1f %14.1f %10.4f\n", static_cast<unsigned long long>(s),
                  static_cast<unsigned long long>(T), par.total, bnd.total, *par.normalized);
    }
  }

  for (const char* preset : {"pos-stake", "device-bound"}) {
    auto sc = OracleScenario::make(with_r_min(*find_preset(preset), 1.0), 3, 4);
    const auto result = min_cost(sc);
    std::printf("%-13s oracle C(3,4) = %.1f after %llu plans (%s)\n", preset, result.min_cost,
                static_cast<unsigned long long>(result.plans_examined),
                verify_bounds(result, sc).passed() ? "bounds hold" : "BOUND VIOLATED");
  }
}
