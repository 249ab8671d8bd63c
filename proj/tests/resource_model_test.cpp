#include <cmath>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "influence_cost/resource_io.hpp"
#include "influence_cost/resource_model.hpp"

using namespace influence_cost;

namespace {

ResourceSpec preset(const char* name) {
  auto p = find_preset(name);
  EXPECT_TRUE(p.has_value()) << name;
  return *p;
}

}  // namespace

TEST(Taxonomy, HasSevenNamedPresets) {
  const auto presets = taxonomy_presets();
  ASSERT_EQ(presets.size(), 7u);
  const char* names[] = {"pow-hardware", "pow-energy",         "pos-stake",   "social-graph",
                         "device-bound", "human-participation", "rate-limited"};
  for (std::size_t i = 0; i < presets.size(); ++i) {
    EXPECT_EQ(presets[i].name, names[i]);
    EXPECT_TRUE(spec_violations(presets[i]).empty()) << presets[i].name;
  }
}

TEST(Taxonomy, FlagsMatchTableColumns) {
  auto stake = preset("pos-stake");
  EXPECT_TRUE(stake.divisible && stake.additive_influence && stake.temporally_reusable() &&
              stake.identity_transferable());

  auto energy = preset("pow-energy");
  EXPECT_TRUE(energy.divisible);
  EXPECT_TRUE(energy.additive_influence);
  EXPECT_FALSE(energy.temporally_reusable());
  EXPECT_TRUE(energy.identity_transferable());

  for (const char* name : {"device-bound", "human-participation", "rate-limited"}) {
    auto s = preset(name);
    EXPECT_FALSE(s.divisible || s.additive_influence || s.temporally_reusable() || s.identity_transferable()) << name;
    EXPECT_TRUE(s.throughput_bounded) << name;
    ASSERT_TRUE(s.tau.has_value()) << name;
    EXPECT_LE(s.r_min, *s.tau);
  }
  EXPECT_TRUE(preset("social-graph").partial_properties);
}

TEST(Taxonomy, EveryPresetClassifiesToItsScalingColumn) {
  for (const auto& spec : taxonomy_presets())
    EXPECT_EQ(classify(spec).resource_class, expected_preset_class(spec.name)) << spec.name;
  EXPECT_EQ(classify(preset("social-graph")).resource_class, ResourceClass::Other);
}

TEST(IsParallelizable, Examples) {
  EXPECT_TRUE(is_parallelizable(preset("pos-stake")));
  EXPECT_TRUE(is_parallelizable(preset("pow-hardware")));
  EXPECT_FALSE(is_parallelizable(preset("device-bound")));

  auto partial = preset("pos-stake");
  partial.transfer = PartialTransfer{0.5};
  EXPECT_FALSE(is_parallelizable(partial));
}

TEST(IsThroughputBounded, Examples) {
  EXPECT_TRUE(is_throughput_bounded(preset("device-bound")));
  EXPECT_FALSE(is_throughput_bounded(preset("pow-hardware")));
  EXPECT_FALSE(is_throughput_bounded(preset("pow-energy")));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(preset("pos-stake")).resource_class, ResourceClass::Parallelizable);
  EXPECT_EQ(classify(preset("human-participation")).resource_class, ResourceClass::ThroughputBounded);

  auto reuse = preset("pow-hardware");
  reuse.reuse = BoundedReuse{5};
  EXPECT_EQ(classify(reuse).resource_class, ResourceClass::Intermediate);

  auto energy = classify(preset("pow-energy"));
  EXPECT_EQ(energy.resource_class, ResourceClass::Other);
  EXPECT_FALSE(energy.reasons.empty());
}

// All 2^5 structural flag combinations, each with and without a rate limit:
// the two extremal classes never coincide, valid or not.
TEST(Classify, ExtremalClassesAreMutuallyExclusiveOverAllFlagCombinations) {
  int valid = 0;
  for (unsigned bits = 0; bits < 64; ++bits) {
    ResourceSpec s;
    s.divisible = bits & 1;
    s.additive_influence = bits & 2;
    s.reuse = static_cast<bool>(bits & 4);
    s.transfer = static_cast<bool>(bits & 8);
    s.throughput_bounded = bits & 16;
    if (bits & 32) s.tau = 1.0;
    EXPECT_FALSE(is_parallelizable(s) && is_throughput_bounded(s)) << bits;
    const auto c = classify(s).resource_class;
    EXPECT_EQ(c == ResourceClass::Parallelizable, is_parallelizable(s)) << bits;
    EXPECT_EQ(c == ResourceClass::ThroughputBounded, is_throughput_bounded(s)) << bits;
    if (spec_violations(s).empty()) ++valid;
  }
  // Valid: 16 without the throughput flag (no tau), 4 with it (tau, window-local, identity-bound).
  EXPECT_EQ(valid, 20);
}

TEST(Validate, RejectsBrokenInvariants) {
  auto s = preset("device-bound");
  s.reuse = true;
  EXPECT_THROW(validate(s), std::invalid_argument);

  s = preset("device-bound");
  s.tau.reset();
  EXPECT_THROW(validate(s), std::invalid_argument);

  s = preset("device-bound");
  s.r_min = 2.0;
  EXPECT_THROW(validate(s), std::invalid_argument);

  s = preset("pos-stake");
  s.tau = 40.0;
  EXPECT_THROW(validate(s), std::invalid_argument);

  s = preset("pos-stake");
  s.transfer = PartialTransfer{1.5};
  EXPECT_THROW(validate(s), std::invalid_argument);

  s = preset("pos-stake");
  s.reuse = BoundedReuse{0};
  EXPECT_THROW(validate(s), std::invalid_argument);

  s = preset("pos-stake");
  s.r_min = 0.0;
  EXPECT_THROW(validate(s), std::invalid_argument);
}

TEST(ChannelResource, Examples) {
  auto tight = channel_resource({"dev-1", 1.0}, 1.0);
  EXPECT_TRUE(is_throughput_bounded(tight));
  EXPECT_EQ(*tight.tau, tight.r_min);

  EXPECT_TRUE(is_throughput_bounded(channel_resource({"dev-2", 2.0}, 0.5)));
  EXPECT_THROW(channel_resource({"dev-3", 1.0}, 2.0), std::invalid_argument);
}

TEST(ChannelResource, AlwaysThroughputBoundedProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> tau_dist(1e-3, 1e3), frac(1e-6, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double tau = tau_dist(rng);
    const double r_min = tau * frac(rng);
    const auto spec = channel_resource({"actor-" + std::to_string(i), tau}, r_min);
    ASSERT_TRUE(spec_violations(spec).empty());
    ASSERT_EQ(classify(spec).resource_class, ResourceClass::ThroughputBounded);
  }
}

TEST(InfluenceFunction, UnitWeightIsValueAtThreshold) {
  InfluenceFunction f(2.0, 32.0);
  EXPECT_EQ(f(0.0), 0.0);
  EXPECT_EQ(f.unit_weight(), 64.0);
  EXPECT_THROW(InfluenceFunction(0.0, 1.0), std::invalid_argument);
}

TEST(ValidateInfluenceFunction, LinearMapsPass) {
  EXPECT_TRUE(validate_influence_function([](double r) { return r; }).passed());
  EXPECT_TRUE(validate_influence_function([](double r) { return 2 * r; }).passed());
  EXPECT_TRUE(validate_influence_function(InfluenceFunction(3.7, 1.0)).passed());
}

TEST(ValidateInfluenceFunction, SquareRootFailsAdditivityAtOneOne) {
  const auto report = validate_influence_function([](double r) { return std::sqrt(r); });
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(report.zero_at_origin);
  EXPECT_TRUE(report.monotone);
  EXPECT_FALSE(report.additive);
  bool found = false;
  for (const auto& f : report.failures) {
    if (f.property == "additive" && f.a == 1.0 && f.b == 1.0) {
      found = true;
      EXPECT_DOUBLE_EQ(f.lhs, 2.0);
      EXPECT_NEAR(f.rhs, 1.414, 1e-3);
    }
  }
  EXPECT_TRUE(found);
}

TEST(ValidateInfluenceFunction, RejectsNonLinearAndNonMonotoneSamples) {
  EXPECT_FALSE(validate_influence_function([](double r) { return r * r; }).additive);
  EXPECT_FALSE(validate_influence_function([](double r) { return std::log1p(r); }).additive);
  EXPECT_FALSE(validate_influence_function([](double r) { return -r; }).monotone);
  const auto shifted = validate_influence_function([](double r) { return r + 1.0; });
  EXPECT_FALSE(shifted.zero_at_origin);
  EXPECT_FALSE(shifted.passed());
}

TEST(ResourceJson, RoundTripsRandomValidSpecs) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    ResourceSpec s;
    s.name = "spec-" + std::to_string(i);
    s.divisible = coin(rng);
    s.additive_influence = coin(rng);
    s.throughput_bounded = coin(rng);
    s.r_min = 0.1 + 10 * unit(rng);
    if (s.throughput_bounded) {
      s.tau = s.r_min * (1.0 + unit(rng));
    } else {
      s.reuse = coin(rng) ? Reusability{BoundedReuse{1 + static_cast<unsigned>(rng() % 9)}} : Reusability{coin(rng)};
      s.transfer = coin(rng) ? Transferability{PartialTransfer{unit(rng)}} : Transferability{coin(rng)};
    }
    ASSERT_TRUE(spec_violations(s).empty());
    EXPECT_EQ(resource_spec_from_json(to_json(s)), s);
    ++checked;
  }
  EXPECT_EQ(checked, 500);
}

TEST(ResourceJson, RejectsAmbiguousOrUnknownFields) {
  EXPECT_THROW(resource_spec_from_json(Json::parse(R"({"r_min":1,"alpha":0.5,"identity_transferable":true})")),
               std::invalid_argument);
  EXPECT_THROW(resource_spec_from_json(Json::parse(R"({"r_min":1,"k":2,"temporally_reusable":true})")),
               std::invalid_argument);
  EXPECT_THROW(resource_spec_from_json(Json::parse(R"({"r_min":1,"colour":"red"})")), std::invalid_argument);
  EXPECT_THROW(resource_spec_from_json(Json::parse(R"({"divisible":true})")), std::invalid_argument);
  EXPECT_THROW(resource_spec_from_json(Json::parse(R"({"r_min":2,"tau":1,"throughput_bounded":true})")),
               std::invalid_argument);
}

TEST(ResourceJson, LoadsArraysAndWrappedDocuments) {
  const auto doc = taxonomy_json(taxonomy_presets());
  // Export carries a derived "class" field; strip it before loading back.
  Json stripped = doc;
  for (auto& r : stripped["resources"]) r.erase("class");
  const auto loaded = resource_specs_from_json(stripped);
  EXPECT_EQ(loaded, taxonomy_presets());
  EXPECT_EQ(resource_specs_from_json(stripped["resources"]).size(), 7u);
}

TEST(ResourceCsv, TaxonomyTableHasOneRowPerPreset) {
  const auto table = taxonomy_csv(taxonomy_presets());
  EXPECT_EQ(table.rows().size(), 7u);
  EXPECT_EQ(table.header().back(), "class");
  EXPECT_EQ(table.rows()[2][0], "pos-stake");
  EXPECT_EQ(table.rows()[2].back(), "Parallelizable");
}
