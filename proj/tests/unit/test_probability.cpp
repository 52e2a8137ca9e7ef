#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "generators.hpp"
#include "riskax/probability.hpp"

using namespace riskax;

TEST(ProbabilitySpace, RenormalizesSmallDrift) {
  Sampler s(7);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = s.index(1, 40);
    auto p = s.pmf(n);
    p[s.index(0, n - 1)] += s.uniform(-5e-10, 5e-10);
    p.front() = std::max(p.front(), 0.0);
    const ProbabilitySpace sp(p);
    double total = 0.0;
    for (double x : sp.probs()) total += x;
    EXPECT_EQ(total, 1.0);
  }
}

TEST(ProbabilitySpace, RejectsInvalidMasses) {
  EXPECT_THROW(ProbabilitySpace({0.5, 0.5 + 2e-9}), ValidationError);
  EXPECT_THROW(ProbabilitySpace({1.2, -0.2}), ValidationError);
  EXPECT_THROW(ProbabilitySpace({0.5, std::nan("")}), ValidationError);
  EXPECT_THROW(ProbabilitySpace(std::vector<double>{}), ValidationError);
  EXPECT_NO_THROW(ProbabilitySpace({1.0, 0.0}));
}

TEST(CostRandomVariable, RejectsBadValues) {
  EXPECT_THROW(CostRandomVariable({0.5, 0.5}, {1.0, INFINITY}), ValidationError);
  EXPECT_THROW(CostRandomVariable({0.5, 0.5}, {1.0, std::nan("")}), ValidationError);
  EXPECT_THROW(CostRandomVariable({0.5, 0.5}, {1.0}), ValidationError);
}

TEST(CostRandomVariable, AdditionNeedsCompatibleSpaces) {
  const CostRandomVariable a({0.5, 0.5}, {1.0, 2.0});
  const CostRandomVariable b({0.25, 0.75}, {1.0, 2.0});
  const CostRandomVariable c({0.5, 0.5}, {3.0, 4.0});
  EXPECT_THROW((void)(a + b), ValidationError);
  const auto sum = a + c;
  EXPECT_EQ(sum[0], 4.0);
  EXPECT_EQ(sum[1], 6.0);
}

TEST(Expectation, Examples) {
  EXPECT_DOUBLE_EQ(expectation(CostRandomVariable(ProbabilitySpace::uniform(4), {1, 2, 3, 4})), 2.5);
  EXPECT_DOUBLE_EQ(expectation(CostRandomVariable({0.1, 0.6, 0.3}, {-7.25, -7.25, -7.25})), -7.25);
  EXPECT_NEAR(expectation(CostRandomVariable({0.4, 0.4, 0.2}, {1, 2, 3})), 1.8, 1e-15);
}

TEST(Variance, Examples) {
  EXPECT_DOUBLE_EQ(variance(CostRandomVariable(ProbabilitySpace::uniform(4), {1, 2, 3, 4})), 1.25);
  EXPECT_DOUBLE_EQ(variance(CostRandomVariable({0.3, 0.7}, {5, 5})), 0.0);
  EXPECT_DOUBLE_EQ(variance(CostRandomVariable(ProbabilitySpace::uniform(4), {2, 2, 3, 4})), 0.6875);
}

TEST(WorstCase, Examples) {
  EXPECT_EQ(worst_case(CostRandomVariable({0.4, 0.4, 0.2}, {1, 2, 3})), 3.0);
  EXPECT_EQ(worst_case(CostRandomVariable({1.0, 0.0}, {5, 100})), 5.0);
  EXPECT_EQ(worst_case(CostRandomVariable({0.4, 0.4, 0.2}, {1, 1.99, 1e10})), 1e10);
}

TEST(DistributionOf, Examples) {
  const auto a = distribution_of(CostRandomVariable({0.5, 0.5}, {1, 10}));
  const auto b = distribution_of(CostRandomVariable({0.5, 0.5}, {10, 1}));
  EXPECT_TRUE(identically_distributed(a, b));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], (Atom{1.0, 0.5}));
  EXPECT_EQ(a[1], (Atom{10.0, 0.5}));

  const auto merged = distribution_of(CostRandomVariable({0.3, 0.7}, {2, 2}));
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].value, 2.0);
  EXPECT_DOUBLE_EQ(merged[0].prob, 1.0);

  const auto sorted = distribution_of(CostRandomVariable(ProbabilitySpace::uniform(3), {3, 1, 2}));
  ASSERT_EQ(sorted.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(sorted[i].value, static_cast<double>(i + 1));
    EXPECT_DOUBLE_EQ(sorted[i].prob, 1.0 / 3.0);
  }
}

TEST(DistributionOf, DropsZeroMassAndMergesWithinTolerance) {
  const auto d = distribution_of(CostRandomVariable({0.5, 0.0, 0.5}, {1.0, 50.0, 1.0 + 5e-13}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_DOUBLE_EQ(d[0].prob, 1.0);
  const auto apart = distribution_of(CostRandomVariable({0.5, 0.5}, {1.0, 1.0 + 1e-9}));
  EXPECT_EQ(apart.size(), 2u);
}

TEST(DistributionOf, CanonicalFormInvariants) {
  Sampler s(11);
  for (int t = 0; t < 300; ++t) {
    const auto z = gen::random_variable(s, s.index(1, 30), s.chance(0.5));
    const auto d = distribution_of(z);
    double total = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_GT(d[i].prob, 0.0);
      if (i > 0) {
        EXPECT_LT(d[i - 1].value, d[i].value);
      }
      total += d[i].prob;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(DistributionOf, PermutationInvariant) {
  Sampler s(12);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = s.index(1, 20);
    const auto z = gen::random_variable(s, n, s.chance(0.5));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    s.shuffle(perm);
    std::vector<double> p(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = z.probs()[perm[i]];
      v[i] = z[perm[i]];
    }
    const CostRandomVariable zp(p, v);
    EXPECT_TRUE(identically_distributed(z, zp));
    EXPECT_NEAR(expectation(z), expectation(zp), 1e-9 * (1.0 + std::abs(expectation(z))));
    EXPECT_NEAR(variance(z), variance(zp), 1e-7 * (1.0 + variance(z)));
    EXPECT_EQ(worst_case(z), worst_case(zp));
  }
}

TEST(Primitives, DependOnlyOnLaw) {
  // Splitting an atom into two halves changes the space but not the law.
  Sampler s(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = s.index(1, 10);
    const auto z = gen::moderate_variable(s, n);
    const std::size_t j = s.index(0, n - 1);
    std::vector<double> p(z.probs().begin(), z.probs().end()), v(z.values().begin(), z.values().end());
    p[j] /= 2.0;
    p.push_back(p[j]);
    v.push_back(v[j]);
    const CostRandomVariable zs(p, v);
    EXPECT_TRUE(identically_distributed(z, zs));
    EXPECT_NEAR(expectation(z), expectation(zs), 1e-12);
    EXPECT_NEAR(variance(z), variance(zs), 1e-9);
    EXPECT_EQ(worst_case(z), worst_case(zs));
  }
}

TEST(IsComonotone, Examples) {
  const CostRandomVariable z(ProbabilitySpace::uniform(3), {1, 2, 3});
  EXPECT_TRUE(is_comonotone(z, z));
  EXPECT_TRUE(is_comonotone(z, z.with_values({0, 5, 5})));
  const CostRandomVariable a(ProbabilitySpace::uniform(2), {1, 2});
  EXPECT_FALSE(is_comonotone(a, a.with_values({2, 1})));
}

TEST(IsComonotone, RejectsIncompatibleSpaces) {
  const CostRandomVariable a({0.5, 0.5}, {1, 2});
  const CostRandomVariable b({0.2, 0.8}, {1, 2});
  EXPECT_THROW((void)is_comonotone(a, b), ValidationError);
}

TEST(IsComonotone, SymmetricAndClosedUnderMonotoneMaps) {
  Sampler s(14);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = s.index(1, 12);
    const auto z = gen::random_variable(s, n, true);
    const auto w = z.with_values(s.costs(n, true));
    EXPECT_EQ(is_comonotone(z, w), is_comonotone(w, z));
    EXPECT_TRUE(is_comonotone(z, z.with_values(std::vector<double>(n, s.uniform(-5, 5)))));
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::floor(z[i] / 2.0) * 3.0 + 1.0;
    EXPECT_TRUE(is_comonotone(z, z.with_values(f)));
  }
}

TEST(IdenticallyDistributed, Examples) {
  EXPECT_TRUE(identically_distributed(CostRandomVariable({0.5, 0.5}, {1, 10}), CostRandomVariable({0.5, 0.5}, {10, 1})));
  EXPECT_TRUE(identically_distributed(CostRandomVariable({1.0}, {5}), CostRandomVariable({0.5, 0.5}, {5, 5})));
  EXPECT_FALSE(identically_distributed(CostRandomVariable(ProbabilitySpace::uniform(2), {1, 2}),
                                       CostRandomVariable(ProbabilitySpace::uniform(2), {1, 3})));
}
