#include <gtest/gtest.h>

#include "influence_cost/cost_engine.hpp"
#include "influence_cost/verification.hpp"
#include "influence_cost/window_sim.hpp"

using namespace influence_cost;

namespace {

ScenarioConfig config(const char* preset, Count m, Count s, Count T, Count n = 200) {
  return {n, m, s, T, *find_preset(preset)};
}

}  // namespace

TEST(InfluenceShare, Examples) {
  EXPECT_DOUBLE_EQ(influence_share(100, 400, 200), 1.0 / 3.0);
  EXPECT_EQ(influence_share(100, 1000, 200), influence_share(100, 400, 200));
  EXPECT_EQ(influence_share(0, 500, 200), 0.0);
  EXPECT_EQ(influence_share(5, 5, 0), 1.0);
  EXPECT_THROW(influence_share(0, 0, 0), std::invalid_argument);
}

TEST(InfluenceShare, BoundedAndMonotone) {
  for (Count n = 0; n <= 40; n += 4)
    for (Count s = 0; s <= 40; s += 3)
      for (Count m = 0; m <= 40; ++m) {
        if (std::min(m, s) + n == 0) continue;
        const double share = influence_share(m, s, n);
        ASSERT_GE(share, 0.0);
        ASSERT_LE(share, 1.0);
        ASSERT_GE(influence_share(m + 1, s, n), share);
        ASSERT_LE(influence_share(m, s, n + 1), share);
      }
}

TEST(Run, ChannelLimitedExample) {
  const auto trace = run(config("device-bound", 50, 400, 10));
  ASSERT_EQ(trace.per_window.size(), 10u);
  for (const auto& w : trace.per_window) {
    EXPECT_EQ(w.active, 50u);
    EXPECT_DOUBLE_EQ(w.share, 0.2);
    EXPECT_EQ(w.share, influence_share(50, 400, 200));
  }
  EXPECT_EQ(trace.total_cost, 500.0);
  EXPECT_EQ(trace.total_cost, cost_throughput_bounded(50, 10, 1.0).total);
}

TEST(Run, ParallelizableExample) {
  const auto trace = run(config("pow-hardware", 0, 400, 10));
  for (const auto& w : trace.per_window) EXPECT_DOUBLE_EQ(w.share, 2.0 / 3.0);
  EXPECT_EQ(trace.per_window[0].expenditure, 400.0);
  for (std::size_t t = 1; t < trace.per_window.size(); ++t) EXPECT_EQ(trace.per_window[t].expenditure, 0.0);
  EXPECT_EQ(trace.total_cost, 400.0);
  EXPECT_EQ(trace.total_cost, cost_parallelizable(400, 10, 1.0).total);
}

TEST(Run, NoAdversary) {
  for (const char* name : {"pow-hardware", "device-bound"}) {
    const auto trace = run(config(name, 10, 0, 5));
    for (const auto& w : trace.per_window) EXPECT_EQ(w.share, 0.0);
    EXPECT_EQ(trace.total_cost, 0.0);
  }
  // No participants at all is reported as a zero share rather than an error.
  EXPECT_EQ(run(config("pow-hardware", 0, 0, 1, 0)).per_window[0].share, 0.0);
}

TEST(Run, RejectsUnsupportedConfigs) {
  EXPECT_THROW(run(config("pow-hardware", 0, 1, 0)), std::invalid_argument);
  EXPECT_THROW(run(config("social-graph", 0, 1, 1)), std::invalid_argument);
  auto no_tau = config("device-bound", 1, 1, 1);
  no_tau.spec.tau.reset();
  EXPECT_THROW(run(no_tau), std::invalid_argument);
}

TEST(Run, TotalCostMatchesCostLaws) {
  for (Count s = 0; s <= 30; s += 5)
    for (Count T = 1; T <= 12; ++T) {
      for (double r : {0.5, 1.0, 2.0}) {
        auto par = config("pos-stake", 0, s, T);
        par.spec = with_r_min(par.spec, r);
        ASSERT_EQ(run(par).total_cost, cost_parallelizable(s, T, r).total);

        auto energy = config("pow-energy", 0, s, T);
        energy.spec = with_r_min(energy.spec, r);
        ASSERT_EQ(run(energy).total_cost, cost_throughput_bounded(s, T, r).total);

        auto tb = config("device-bound", s, s, T);
        tb.spec = with_r_min(tb.spec, r);
        ASSERT_EQ(run(tb).total_cost, cost_throughput_bounded(s, T, r).total);
      }
      for (Count k = 1; k <= 5; ++k) {
        ScenarioConfig reuse{200, 0, s, T, bounded_reuse_spec(static_cast<unsigned>(k))};
        ASSERT_EQ(run(reuse).total_cost, cost_bounded_reuse(s, T, 1.0, k).total);
      }
      for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
        ScenarioConfig partial{200, 0, s, T, partial_transfer_spec(alpha)};
        ASSERT_DOUBLE_EQ(run(partial).total_cost, cost_partial_transferability(s, T, 1.0, alpha).model_cost);
      }
    }
}

TEST(Run, ThroughputShareInvariantInIdentityCount) {
  for (Count m = 0; m <= 60; m += 6) {
    const auto reference = run(config("rate-limited", m, m, 3)).per_window;
    for (Count s = m; s <= m + 500; s += 37) {
      const auto trace = run(config("rate-limited", m, s, 3)).per_window;
      for (std::size_t t = 0; t < trace.size(); ++t) ASSERT_EQ(trace[t].share, reference[t].share);
    }
  }
}

TEST(Run, ParallelizableShareInvariantUnderRepartition) {
  // The same aggregate stock s*r_min spread over different identity counts
  // at proportionally scaled r_min carries the same influence.
  const double stock = 120.0;
  const auto reference = run({200, 0, 120, 4, with_r_min(*find_preset("pow-hardware"), stock / 120)});
  for (Count s : {1, 2, 3, 5, 8, 12, 24, 40, 60}) {
    auto spec = with_r_min(*find_preset("pow-hardware"), stock / static_cast<double>(s));
    const auto trace = run({200, 0, s, 4, spec});
    for (std::size_t t = 0; t < trace.per_window.size(); ++t)
      EXPECT_NEAR(trace.per_window[t].adversarial_influence, reference.per_window[t].adversarial_influence, 1e-9);
    EXPECT_NEAR(trace.total_cost, stock, 1e-9);
  }
}

TEST(NonAmplification, Fig3ColumnsIdentical) {
  const auto table = fig3_experiment();
  ASSERT_EQ(table.m_values.size(), 20u);
  EXPECT_TRUE(table.warnings.empty());
  for (std::size_t i = 0; i < table.m_values.size(); ++i) {
    const double m = static_cast<double>(table.m_values[i]);
    ASSERT_EQ(table.shares[i].size(), 3u);
    EXPECT_EQ(table.shares[i][0], table.shares[i][1]);
    EXPECT_EQ(table.shares[i][1], table.shares[i][2]);
    EXPECT_EQ(table.shares[i][0], m / (m + 200.0));
  }
  EXPECT_EQ(table.shares.back()[0], 0.5);
}

TEST(NonAmplification, SmallIdentityCountCapsAndWarns) {
  std::vector<Count> m;
  for (Count v = 10; v <= 200; v += 10) m.push_back(v);
  const auto table = non_amplification_experiment(m, {50}, 200);
  EXPECT_EQ(table.warnings.size(), 1u);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= 50) {
      EXPECT_EQ(table.shares[i][0], 0.2);
    }
  }
  EXPECT_THROW(non_amplification_experiment({}, {400}, 200), std::invalid_argument);
}
