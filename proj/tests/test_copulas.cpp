#include <cmath>

#include <gtest/gtest.h>

#include "shockcop/shockcop.hpp"

using namespace shockcop;

namespace {
const double kE1 = std::exp(-1.0);
const double kC = 1.0 - std::exp(-1.0);

// xy outside [0, c) x [0, d); e^-mu u + (1 - e^-lambda) w - e^-mu (1 - e^-lambda) or 0 inside
double example_copula(double lambda, double mu, double u, double w) {
  const double c = 1.0 - std::exp(-lambda), d = std::exp(-mu);
  if (u >= c || w >= d) return u * w;
  return std::max(0.0, d * u + c * w - d * c);
}

Generator example_f(double lambda) {
  return to_rmm(extend_phi(DistributionFn::exponential(lambda), DistributionFn::dirac(1.0)));
}
Generator example_g(double mu) {
  return to_rmm(extend_chi(DistributionFn::exponential(mu), DistributionFn::dirac(1.0)));
}
}  // namespace

TEST(Marshall2, IndependenceAndComonotone) {
  const auto id = forms::identity(GeneratorKind::Phi);
  const auto one = forms::unit_step(GeneratorKind::Phi);
  for (double u : {0.0, 0.2, 0.5, 1.0}) {
    for (double v : {0.0, 0.3, 0.9, 1.0}) {
      EXPECT_NEAR(marshall2(id, forms::identity(GeneratorKind::Psi), u, v), u * v, 1e-15);
      EXPECT_NEAR(marshall2(one, forms::unit_step(GeneratorKind::Psi), u, v), std::min(u, v), 1e-15);
    }
  }
}

TEST(Marshall2, BothDisplayedFormsAgree) {
  const auto phi = forms::max_linear(GeneratorKind::Phi, kC);
  const auto psi = forms::max_linear(GeneratorKind::Psi, kC);
  EXPECT_NEAR(marshall2(phi, psi, 0.3, 0.5), marshall2_alt(phi, psi, 0.3, 0.5), 1e-15);
  for (double u = 0.05; u < 1.0; u += 0.1) {
    for (double v = 0.05; v < 1.0; v += 0.1) EXPECT_NEAR(marshall2(phi, psi, u, v), marshall2_alt(phi, psi, u, v), 1e-14);
  }
}

TEST(MarshallN, ProductAndMin) {
  const auto id = GeneratorVector::marshall(std::vector<Generator>(3, forms::identity(GeneratorKind::Phi)));
  EXPECT_NEAR(marshall_n(id, {0.5, 0.5, 0.5}), 0.125, 1e-15);
  const auto one = GeneratorVector::marshall(std::vector<Generator>(3, forms::unit_step(GeneratorKind::Phi)));
  EXPECT_NEAR(marshall_n(one, {0.2, 0.7, 0.4}), 0.2, 1e-15);
}

TEST(Maxmin2, KnownValuesAndMargins) {
  const auto chi_id = forms::identity(GeneratorKind::Chi);
  const auto phi_id = forms::identity(GeneratorKind::Phi);
  EXPECT_NEAR(maxmin2(phi_id, chi_id, 0.3, 0.6), 0.18, 1e-15);
  const auto phi1 = forms::unit_step(GeneratorKind::Phi);
  const auto chi0 = forms::zero_until_one(GeneratorKind::Chi);
  EXPECT_NEAR(maxmin2(phi1, chi0, 0.5, 0.5), 0.5, 1e-15);
  for (double t : {0.0, 0.25, 0.8, 1.0}) {
    EXPECT_EQ(maxmin2(phi1, chi0, 0.0, t), 0.0);
    EXPECT_EQ(maxmin2(phi1, chi0, t, 0.0), 0.0);
    EXPECT_NEAR(maxmin2(phi1, chi0, 1.0, t), t, 1e-15);
    EXPECT_NEAR(maxmin2(phi1, chi0, t, 1.0), t, 1e-15);
  }
}

TEST(MaxminN, BivariateReduction) {
  const auto phi = extend_phi(DistributionFn::exponential(1.0), DistributionFn::uniform(0.0, 2.0));
  const auto chi = extend_chi(DistributionFn::exponential(2.0), DistributionFn::uniform(0.0, 2.0));
  const auto gv = GeneratorVector::maxmin({phi, chi}, 1);
  for (int a = 0; a <= 100; ++a) {
    for (int b = 0; b <= 100; ++b) {
      const double u = a / 100.0, v = b / 100.0;
      ASSERT_NEAR(maxmin_n(gv, {u, v}), maxmin2(phi, chi, u, v), 1e-14) << u << " " << v;
    }
  }
}

TEST(MaxminN, TrivialGeneratorsGiveProduct) {
  const auto gv = GeneratorVector::maxmin(
      {forms::identity(GeneratorKind::Phi), forms::identity(GeneratorKind::Chi), forms::identity(GeneratorKind::Chi)}, 1);
  EXPECT_NEAR(maxmin_n(gv, {0.3, 0.5, 0.7}), 0.105, 1e-15);
}

TEST(Rmm2, ExampleValue) {
  const auto f = example_f(1.0), g = example_g(1.0);
  // 0.3 * 0.2 - (1 - e^-1 - 0.3)(e^-1 - 0.2), frozen with 30-digit arithmetic
  EXPECT_NEAR(rmm2(f, g, 0.3, 0.2), 0.00424378618231460539, 1e-15);
  EXPECT_NEAR(rmm2(f, g, 0.3, 0.2), kE1 * 0.3 + kC * 0.2 - kE1 * kC, 1e-15);
}

TEST(Rmm2, ReductionsToProductAndLowerBound) {
  const auto zero = forms::truncated_linear(GeneratorKind::RmmF, 0.0);
  const auto gzero = forms::truncated_linear(GeneratorKind::RmmG, 0.0);
  const auto f1 = forms::truncated_linear(GeneratorKind::RmmF, 1.0);
  const auto g1 = forms::truncated_linear(GeneratorKind::RmmG, 1.0);
  for (double x = 0.0; x <= 1.0; x += 0.125) {
    for (double y = 0.0; y <= 1.0; y += 0.125) {
      EXPECT_NEAR(rmm2(zero, gzero, x, y), x * y, 1e-15);
      EXPECT_NEAR(rmm2(f1, g1, x, y), std::max(0.0, x + y - 1.0), 1e-15);
    }
  }
}

TEST(Rmm2, MatchesThreeCaseClosedFormOnGrid) {
  const auto f = example_f(1.0), g = example_g(1.0);
  double worst = 0.0;
  for (int a = 0; a <= 100; ++a) {
    for (int b = 0; b <= 100; ++b) {
      const double u = a / 100.0, w = b / 100.0;
      worst = std::max(worst, std::abs(rmm2(f, g, u, w) - example_copula(1.0, 1.0, u, w)));
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(RmmN, ReducesToRmm2AndProduct) {
  const auto f = example_f(1.5), g = example_g(0.7);
  const auto gv = GeneratorVector::rmm({f, g}, 1);
  for (double x : {0.0, 0.1, 0.4, 0.9, 1.0}) {
    for (double y : {0.0, 0.2, 0.3, 1.0}) EXPECT_NEAR(rmm_n(gv, {x, y}), rmm2(f, g, x, y), 1e-15);
  }
  const auto zf = forms::truncated_linear(GeneratorKind::RmmF, 0.0);
  const auto zg = forms::truncated_linear(GeneratorKind::RmmG, 0.0);
  const auto gv3 = GeneratorVector::rmm({zf, zg, zg}, 1);
  EXPECT_NEAR(rmm_n(gv3, {0.5, 0.4, 0.3}), 0.06, 1e-15);
}

TEST(GeneratorVector, RejectsWrongKinds) {
  EXPECT_THROW(GeneratorVector::rmm({forms::identity(GeneratorKind::Phi), example_g(1.0)}, 1), std::invalid_argument);
  EXPECT_THROW(GeneratorVector::maxmin({forms::identity(GeneratorKind::Phi), forms::identity(GeneratorKind::Chi)}, 2),
               std::invalid_argument);
  EXPECT_THROW(GeneratorVector::marshall({forms::identity(GeneratorKind::Phi)}), std::invalid_argument);
}

TEST(Joint, MarshallExponentialDirac) {
  const auto m = ShockModel::precise(Family::Marshall, 2, {DistributionFn::exponential(1.0), DistributionFn::exponential(2.0)},
                                     DistributionFn::dirac(1.0));
  EXPECT_NEAR(joint_marshall_H(m, {1.5, 2.0}), (1 - std::exp(-1.5)) * (1 - std::exp(-4.0)), 1e-15);
  EXPECT_EQ(joint_marshall_H(m, {0.5, 2.0}), 0.0);
  EXPECT_EQ(joint_marshall_H(m, {-kInfinity, 2.0}), 0.0);
  EXPECT_EQ(joint_marshall_H(m, {kInfinity, kInfinity}), 1.0);
  EXPECT_NEAR(ComposedModel(m).joint({1.5, 2.0}), joint_marshall_H(m, {1.5, 2.0}), 1e-12);
}

TEST(Joint, RmmHsigmaExample) {
  const auto m = example::precise_model(1.0, 1.0);
  const double expected = 0.471195376476020731709800040019;  // (1 - e^-1.5) e^-0.5
  EXPECT_NEAR(joint_rmm_Hsigma_direct(m, {1.5, 0.5}), expected, 1e-15);
  EXPECT_NEAR(joint_rmm_Hsigma(m, {1.5, 0.5}), expected, 1e-12);
  EXPECT_EQ(joint_rmm_Hsigma_direct(m, {0.5, 1.5}), 0.0);
  EXPECT_EQ(joint_rmm_Hsigma_direct(m, {1.0, 1.0}), 0.0);
}

TEST(Joint, MaxminEmptyMinSideIsMarshall) {
  const auto comps = std::vector<DistributionFn>{DistributionFn::exponential(1.0), DistributionFn::uniform(0.0, 2.0),
                                                 DistributionFn::exponential(0.5)};
  const auto z = DistributionFn::exponential(0.3);
  const auto mm = ShockModel::precise(Family::MaxMin, 2, comps, z);
  // min-type coordinate at +inf: only the empty subset survives
  const Point x{1.0, 1.2, kInfinity};
  const auto mar = ShockModel::precise(Family::Marshall, 2, {comps[0], comps[1]}, z);
  EXPECT_NEAR(joint_maxmin_H(mm, x), joint_marshall_H(mar, {1.0, 1.2}), 1e-15);
}

TEST(Copula, DispatchChecksDimension) {
  const auto gv = GeneratorVector::rmm({example_f(1.0), example_g(1.0)}, 1);
  EXPECT_THROW(copula(gv, {0.5}), std::invalid_argument);
  EXPECT_NEAR(copula(gv, {0.3, 0.2}), 0.00424378618231460539, 1e-15);
}
