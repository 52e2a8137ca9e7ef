#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "riskax/audit.hpp"
#include "riskax/envelope.hpp"
#include "riskax/museum.hpp"

using namespace riskax;

namespace {

SetFunction any_nonempty(std::size_t n) {
  return SetFunction::from(n, [](Subset a) { return a != 0 ? 1.0 : 0.0; });
}

void expect_pmf_near(const Pmf& got, const Pmf& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
}

}  // namespace

TEST(RiskEnvelope, Validation) {
  EXPECT_THROW(RiskEnvelope({}), ValidationError);
  EXPECT_THROW(RiskEnvelope({{0.5, 0.5}, {1.0}}), ValidationError);
  EXPECT_THROW(RiskEnvelope({{0.6, 0.6}}), ValidationError);
  EXPECT_THROW(RiskEnvelope({{1.5, -0.5}}), ValidationError);
}

TEST(RiskEnvelope, SortedAndDeduplicated) {
  const RiskEnvelope env({{0.0, 1.0}, {1.0, 0.0}, {0.0, 1.0 - 1e-13}, {0.5, 0.5}});
  ASSERT_EQ(env.vertices().size(), 3u);
  expect_pmf_near(env.vertices()[0], {0.0, 1.0});
  expect_pmf_near(env.vertices()[1], {0.5, 0.5});
  expect_pmf_near(env.vertices()[2], {1.0, 0.0});
}

TEST(EnvelopeOf, ProbabilityMeasureHasSingleVertex) {
  const ProbabilitySpace p({0.4, 0.4, 0.2});
  const auto env = envelope_of(probability_capacity(p));
  ASSERT_EQ(env.vertices().size(), 1u);
  expect_pmf_near(env.vertices()[0], {0.4, 0.4, 0.2});
}

TEST(EnvelopeOf, AnyNonemptyGivesPointMasses) {
  const auto env = envelope_of(any_nonempty(2));
  ASSERT_EQ(env.vertices().size(), 2u);
  expect_pmf_near(env.vertices()[0], {0.0, 1.0});
  expect_pmf_near(env.vertices()[1], {1.0, 0.0});
}

TEST(EnvelopeOf, CvarCapacityOnUniformPair) {
  const auto g = distortion_set_function(SpectralMeasure::point(0.5), ProbabilitySpace::uniform(2));
  const auto env = envelope_of(g);
  ASSERT_EQ(env.vertices().size(), 2u);
  expect_pmf_near(env.vertices()[0], {0.0, 1.0});
  expect_pmf_near(env.vertices()[1], {1.0, 0.0});
}

TEST(EnvelopeOf, Preconditions) {
  const auto supermodular = SetFunction::from(2, [](Subset a) { return a == 3 ? 1.0 : 0.0; });
  EXPECT_THROW((void)envelope_of(supermodular), ValidationError);
  EXPECT_THROW((void)envelope_of(SetFunction(2, {0.0, 0.5, 0.5, 0.8})), ValidationError);
  EXPECT_THROW((void)envelope_of(SetFunction(2, {0.0, 0.9, 0.1, 0.5})), ValidationError);
  EXPECT_THROW((void)envelope_of(any_nonempty(8)), ValidationError);
  EXPECT_NO_THROW((void)envelope_of(any_nonempty(7)));
}

TEST(EnvelopeOf, VerticesAreInTheCore) {
  Sampler s(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = s.index(1, 6);
    const auto g = gen::random_submodular(s, n);
    const auto env = envelope_of(g);
    for (const auto& q : env.vertices()) {
      double total = 0.0;
      for (double x : q) total += x;
      EXPECT_NEAR(total, 1.0, 1e-9);
      for (Subset a = 0; a <= g.full(); ++a) {
        double qa = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          if (a & (Subset{1} << i)) qa += q[i];
        EXPECT_LE(qa, g(a) + 1e-9);
      }
    }
    for (std::size_t i = 1; i < env.vertices().size(); ++i) EXPECT_LT(env.vertices()[i - 1], env.vertices()[i]);
  }
}

TEST(EnvelopeEval, Examples) {
  const auto [z, zp] = museum::table2_pair();
  EXPECT_NEAR(envelope_eval(z, RiskEnvelope({{0.4, 0.4, 0.2}})), expectation(z), 1e-12);
  EXPECT_EQ(envelope_eval(z, envelope_of(any_nonempty(3))), worst_case(z));
  const auto cvar_env = envelope_of(distortion_set_function(SpectralMeasure::point(0.3), z.space()));
  EXPECT_NEAR(envelope_eval(z, cvar_env), 8.0 / 3.0, 1e-12);
  EXPECT_NEAR(envelope_eval(zp, cvar_env), cvar(zp, 0.3), 1e-9 * cvar(zp, 0.3));
  EXPECT_THROW((void)envelope_eval(z, RiskEnvelope({{0.5, 0.5}})), ValidationError);
}

TEST(Duality, EnvelopeEqualsChoquet) {
  Sampler s(42);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = s.index(1, 6);
    const auto g = gen::random_submodular(s, n);
    const auto env = envelope_of(g);
    for (int k = 0; k < 5; ++k) {
      const auto z = gen::random_variable(s, n, s.chance(0.3));
      const double a = envelope_eval(z, env);
      const double b = choquet_integral(z, g);
      EXPECT_LE(std::abs(a - b), 1e-9 * std::max(1.0, std::abs(b))) << "trial " << t;
    }
  }
}

TEST(Duality, NamedExamples) {
  Sampler s(43);
  const ProbabilitySpace p({0.1, 0.2, 0.3, 0.4});
  for (const auto& g : {probability_capacity(p), any_nonempty(4),
                        distortion_set_function(SpectralMeasure({{0.25, 0.5}, {1.0, 0.5}}), p)}) {
    const auto env = envelope_of(g);
    for (int k = 0; k < 50; ++k) {
      const auto z = gen::random_variable(s, 4, k % 2 == 0);
      EXPECT_NEAR(envelope_eval(z, env), choquet_integral(z, g), 1e-9 * std::max(1.0, std::abs(choquet_integral(z, g))));
    }
  }
}

// The envelope metric is a worst-case expectation over a fixed set of pmfs on
// n outcomes. Coherence relations are audited on cases drawn over that space.
TEST(EnvelopeMetric, CoherenceRelationsHold) {
  Sampler s(44);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = s.index(2, 6);
    const auto g = gen::random_submodular(s, n);
    const auto env = envelope_of(g);
    const Metric rho = [env](const CostRandomVariable& z) { return envelope_eval(z, env); };
    const auto space = s.space(n);
    for (int k = 0; k < 50; ++k) {
      const CostRandomVariable z(space, s.costs(n, s.chance(0.3)));
      std::vector<double> up(z.values().begin(), z.values().end());
      for (double& x : up) x += s.chance(0.5) ? s.uniform(0.0, 5.0) : 0.0;
      const CostRandomVariable zp(space, s.costs(n, s.chance(0.3)));

      EXPECT_FALSE(check_relation(Property::Monotonicity, rho, {"up", {z, z.with_values(up)}, 0.0}).violated());
      EXPECT_FALSE(
          check_relation(Property::TranslationInvariance, rho, {"shift", {z}, s.uniform(-10.0, 10.0)}).violated());
      EXPECT_FALSE(check_relation(Property::PositiveHomogeneity, rho, {"scale", {z}, s.uniform(0.0, 5.0)}).violated());
      EXPECT_FALSE(check_relation(Property::Subadditivity, rho, {"pair", {z, zp}, 0.0}).violated());
    }
  }
}
