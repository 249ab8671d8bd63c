#pragma once

// Published figures the implementation is checked against.

#include <array>

#include "influence_cost/cost_engine.hpp"

namespace influence_cost::reference {

// Crossover s* printed to one decimal, rows T = 10, 25, 50, 100, 200 and
// columns r_min = 0.5, 1.0, 2.0.
inline constexpr std::array<std::array<double, 3>, 5> kPrintedCrossover{{
    {2.9, 1.2, 0.6},
    {2.3, 1.1, 0.5},
    {2.1, 1.0, 0.5},
    {2.1, 1.0, 0.5},
    {2.0, 1.0, 0.5},
}};

// Printed values are rounded to one decimal. The slack absorbs the binary
// representation error at half-way cells such as 1.25 vs 1.2.
inline constexpr double kCrossoverTolerance = 0.05 + 1e-12;

}  // namespace influence_cost::reference
