#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "shockcop/shockcop.hpp"

using namespace shockcop;

namespace {
const double kE1 = std::exp(-1.0);
}

TEST(DistributionFn, ExponentialValues) {
  const auto F = DistributionFn::exponential(1.0);
  EXPECT_EQ(F.value(0.0), 0.0);
  EXPECT_EQ(F.value(-3.0), 0.0);
  EXPECT_NEAR(F.value(1.0), 0.632120558828557678, 1e-15);
  EXPECT_EQ(F.value(kInfinity), 1.0);
  EXPECT_EQ(F.value(-kInfinity), 0.0);
}

TEST(DistributionFn, ExponentialMatchesQuadratureOfDensity) {
  // composite Simpson on [0, 1] of exp(-t)
  const int m = 2000;
  double s = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double t = static_cast<double>(k) / m;
    const double w = (k == 0 || k == m) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    s += w * std::exp(-t);
  }
  s /= 3.0 * m;
  EXPECT_NEAR(DistributionFn::exponential(1.0).value(1.0), s, 1e-12);
}

TEST(DistributionFn, DiracStep) {
  const auto F = DistributionFn::dirac(1.0);
  EXPECT_EQ(F.value(0.5), 0.0);
  EXPECT_EQ(F.value(1.0), 1.0);
  EXPECT_EQ(F.left_limit(1.0), 0.0);
  EXPECT_EQ(F.right_limit(1.0), 1.0);
}

TEST(DistributionFn, InfiniteDiracLocations) {
  const auto lo = DistributionFn::dirac(-kInfinity);
  const auto hi = DistributionFn::dirac(kInfinity);
  EXPECT_EQ(lo.value(-1e300), 1.0);
  EXPECT_EQ(hi.value(1e300), 0.0);
  EXPECT_EQ(hi.value(kInfinity), 1.0);
}

TEST(DistributionFn, OneSidedLimits) {
  const auto F = DistributionFn::exponential(1.0);
  EXPECT_EQ(F.left_limit(1.0), F.right_limit(1.0));
  const auto D = DistributionFn::discrete({{0.0, 0.5}, {2.0, 0.5}});
  EXPECT_DOUBLE_EQ(D.left_limit(2.0), 0.5);
  EXPECT_DOUBLE_EQ(D.right_limit(2.0), 1.0);
  EXPECT_DOUBLE_EQ(D.value(2.0), 1.0);
  EXPECT_DOUBLE_EQ(D.value(1.0), 0.5);
}

TEST(DistributionFn, DiscreteSortsAndRequiresUnitMass) {
  EXPECT_THROW(DistributionFn::discrete({{3.0, 2.0}, {1.0, 2.0}}), std::invalid_argument);
  const auto D = DistributionFn::discrete({{3.0, 0.5}, {1.0, 0.5}});
  EXPECT_DOUBLE_EQ(D.value(1.0), 0.5);
  EXPECT_DOUBLE_EQ(D.value(3.0), 1.0);
  const auto atoms = *D.atoms();
  ASSERT_EQ(atoms.size(), 2u);
  EXPECT_EQ(atoms[0].location, 1.0);
}

TEST(DistributionFn, RejectsInvalidInputs) {
  EXPECT_THROW(DistributionFn::exponential(0.0), std::invalid_argument);
  EXPECT_THROW(DistributionFn::exponential(-1.0), std::invalid_argument);
  EXPECT_THROW(DistributionFn::uniform(2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(DistributionFn::discrete({}), std::invalid_argument);
  EXPECT_THROW(DistributionFn::discrete({{1.0, -0.5}}), std::invalid_argument);
  EXPECT_THROW(DistributionFn::piecewise_linear({{0.0, 0.0, 0.5, 0.4}}), std::invalid_argument);
  EXPECT_THROW(DistributionFn::piecewise_linear({{0.0, 0.0, 0.0, 0.6}, {1.0, 0.5, 1.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(DistributionFn::exponential(1.0).value(std::nan("")), std::invalid_argument);
}

TEST(DistributionFn, PiecewiseLinearJumpsAndPointValues) {
  // jump at 0 from 0 to 0.2 with point value 0.1; linear to 0.8 at 1; jump to 1
  const auto F = DistributionFn::piecewise_linear({{0.0, 0.0, 0.1, 0.2}, {1.0, 0.8, 1.0, 1.0}});
  EXPECT_DOUBLE_EQ(F.value(0.0), 0.1);
  EXPECT_DOUBLE_EQ(F.left_limit(0.0), 0.0);
  EXPECT_DOUBLE_EQ(F.right_limit(0.0), 0.2);
  EXPECT_NEAR(F.value(0.5), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(F.left_limit(1.0), 0.8);
  EXPECT_DOUBLE_EQ(F.value(2.0), 1.0);
  EXPECT_DOUBLE_EQ(F.value(-1.0), 0.0);
}

TEST(DistributionFn, LifetimeMaxOfExponentialAndDirac) {
  const auto G = lifetime_max(DistributionFn::exponential(1.0), DistributionFn::dirac(1.0));
  EXPECT_EQ(G.value(0.999), 0.0);
  for (double x : {1.0, 1.5, 3.0}) EXPECT_NEAR(G.value(x), 1.0 - std::exp(-x), 1e-15);
}

TEST(DistributionFn, LifetimeMaxIdentityFactor) {
  const auto fx = DistributionFn::exponential(2.0);
  const auto G = lifetime_max(fx, DistributionFn::dirac(-kInfinity));
  for (double x : {-1.0, 0.0, 0.3, 2.0}) EXPECT_EQ(G.value(x), fx.value(x));
}

TEST(DistributionFn, LifetimeMinOfExponentialAndDirac) {
  const auto W = lifetime_min(DistributionFn::exponential(1.0), DistributionFn::dirac(1.0));
  for (double y : {0.0, 0.4, 0.99}) EXPECT_NEAR(W.value(y), 1.0 - std::exp(-y), 1e-15);
  EXPECT_EQ(W.value(1.0), 1.0);
  EXPECT_NEAR(W.left_limit(1.0), 1.0 - kE1, 1e-15);
}

TEST(DistributionFn, LifetimeMinIdentityFactor) {
  const auto fy = DistributionFn::uniform(0.0, 2.0);
  const auto W = lifetime_min(fy, DistributionFn::dirac(kInfinity));
  for (double y : {-1.0, 0.5, 1.7, 3.0}) EXPECT_EQ(W.value(y), fy.value(y));
}

TEST(DistributionFn, LifetimesOfDiscretePairsMatchEnumeration) {
  const auto a = DistributionFn::discrete({{0.0, 0.2}, {1.0, 0.3}, {3.0, 0.5}});
  const auto b = DistributionFn::discrete({{1.0, 0.6}, {2.0, 0.4}});
  const auto mx = lifetime_max(a, b), mn = lifetime_min(a, b);
  const auto sa = *a.atoms(), sb = *b.atoms();
  for (double x = -0.5; x <= 3.5; x += 0.25) {
    double pmax = 0.0, pmin = 0.0;
    for (const auto& s : sa) {
      for (const auto& t : sb) {
        if (std::max(s.location, t.location) <= x) pmax += s.mass * t.mass;
        if (std::min(s.location, t.location) <= x) pmin += s.mass * t.mass;
      }
    }
    EXPECT_NEAR(mx.value(x), pmax, 1e-15) << x;
    EXPECT_NEAR(mn.value(x), pmin, 1e-15) << x;
  }
}

TEST(DistributionFn, Quantiles) {
  const auto D = DistributionFn::discrete({{0.0, 0.5}, {2.0, 0.5}});
  EXPECT_EQ(D.lower_quantile(0.5), 0.0);
  EXPECT_EQ(D.upper_quantile(0.5), 2.0);
  EXPECT_EQ(D.lower_quantile(0.7), 2.0);
  const auto U = DistributionFn::uniform(1.0, 3.0);
  EXPECT_NEAR(U.lower_quantile(0.25), 1.5, 1e-15);
  const auto P = DistributionFn::product(DistributionFn::exponential(1.0), DistributionFn::uniform(0.0, 1.0));
  const double q = P.lower_quantile(0.3);
  EXPECT_NEAR(P.value(q), 0.3, 1e-14);
}

TEST(DistributionFn, MixtureIsPointwiseCombination) {
  const auto a = DistributionFn::exponential(1.0), b = DistributionFn::dirac(0.5);
  const auto m = DistributionFn::mixture(0.25, a, b);
  for (double x : {0.0, 0.4, 0.5, 2.0}) EXPECT_NEAR(m.value(x), 0.25 * a.value(x) + 0.75 * b.value(x), 1e-15);
  EXPECT_THROW(DistributionFn::mixture(1.5, a, b), std::invalid_argument);
}

TEST(DistributionFn, SurvivalViewInvolution) {
  const auto F = DistributionFn::exponential(0.7);
  const auto S = survival(F);
  const SurvivalView<decltype(S)> twice(S);
  for (double x : {0.0, 0.3, 5.0}) {
    EXPECT_NEAR(S(x), std::exp(-0.7 * x), 1e-15);
    EXPECT_EQ(twice(x), 1.0 - (1.0 - F.value(x)));
  }
}
