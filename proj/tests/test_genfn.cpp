#include <cmath>

#include <gtest/gtest.h>

#include "shockcop/shockcop.hpp"

using namespace shockcop;

namespace {
const double kE1 = std::exp(-1.0);
const double kC = 1.0 - std::exp(-1.0);

std::vector<double> unit_points(int m) {
  std::vector<double> us;
  for (int k = 0; k < m; ++k) us.push_back(static_cast<double>(k) / (m - 1));
  return us;
}
}  // namespace

TEST(ExtendPhi, ExponentialWithDiracShock) {
  const auto phi = extend_phi(DistributionFn::exponential(1.0), DistributionFn::dirac(1.0));
  EXPECT_EQ(phi(0.0), 0.0);
  for (double u : unit_points(1000)) {
    if (u == 0.0) continue;
    EXPECT_NEAR(phi(u), std::max(u, kC), 1e-12) << u;
  }
}

TEST(ExtendPhi, NonBindingShockGivesIdentity) {
  const auto phi = extend_phi(DistributionFn::exponential(1.3), DistributionFn::dirac(-kInfinity));
  for (double u : unit_points(257)) EXPECT_NEAR(phi(u), u, 1e-12) << u;
}

TEST(ExtendPhi, DiscreteInputsRecoverComponentAtImagePoints) {
  const auto fx = DistributionFn::discrete({{0.0, 0.3}, {2.0, 0.3}, {3.0, 0.4}});
  const auto fz = DistributionFn::discrete({{1.0, 0.5}, {2.0, 0.25}, {4.0, 0.25}});
  const auto phi = extend_phi(fx, fz);
  for (double x = -0.5; x <= 4.5; x += 0.5) {
    const double u = fx.value(x) * fz.value(x);
    if (u > 0.0) {
      EXPECT_NEAR(phi(u), fx.value(x), 1e-12) << x;
    }
  }
}

TEST(ExtendPhi, BranchesAgainstDirectFormula) {
  // u in the jump of F_U at x0 = 2: F_U(2-) = 0.3 * 0.5, F_U(2) = 0.6 * 0.75
  const auto fx = DistributionFn::discrete({{0.0, 0.3}, {2.0, 0.3}, {3.0, 0.4}});
  const auto fz = DistributionFn::discrete({{1.0, 0.5}, {2.0, 0.25}, {4.0, 0.25}});
  const auto phi = extend_phi(fx, fz);
  const double fz0 = 0.75;
  const double ul = 0.3 * fz0, uu = 0.6 * fz0;
  EXPECT_NEAR(phi(0.16), 0.3, 1e-15);             // below ul: F_X(x0-)
  EXPECT_NEAR(phi(0.3), 0.3 / fz0, 1e-15);        // middle branch
  EXPECT_NEAR(phi(ul), 0.3, 1e-15);               // ties go to the middle branch
  EXPECT_NEAR(phi(uu), 0.6, 1e-15);
  EXPECT_NEAR(phi(0.44), 0.44 / fz0, 1e-15);
}

TEST(ExtendPsi, SymmetricToPhi) {
  const auto psi = extend_psi(DistributionFn::exponential(1.0), DistributionFn::dirac(1.0));
  EXPECT_EQ(psi.kind(), GeneratorKind::Psi);
  for (double v : {0.1, 0.5, 0.7, 1.0}) EXPECT_NEAR(psi(v), std::max(v, kC), 1e-12);
}

TEST(ExtendChi, ExponentialWithDiracShock) {
  const auto chi = extend_chi(DistributionFn::exponential(1.0), DistributionFn::dirac(1.0));
  EXPECT_NEAR(chi(0.3), 0.3, 1e-12);
  EXPECT_NEAR(chi(0.7), kC, 1e-12);
  EXPECT_EQ(chi(1.0), 1.0);
  EXPECT_EQ(chi(0.0), 0.0);
}

TEST(ExtendChi, NonBindingShockGivesIdentity) {
  const auto chi = extend_chi(DistributionFn::uniform(0.0, 3.0), DistributionFn::dirac(kInfinity));
  for (double v : unit_points(257)) EXPECT_NEAR(chi(v), v, 1e-12) << v;
}

TEST(ExtendChi, DiscreteInputsRecoverComponent) {
  const auto fy = DistributionFn::discrete({{0.0, 0.25}, {1.0, 0.5}, {3.0, 0.25}});
  const auto fz = DistributionFn::discrete({{1.0, 0.4}, {2.0, 0.6}});
  const auto chi = extend_chi(fy, fz);
  const auto fw = lifetime_min(fy, fz);
  for (double y = -0.5; y <= 3.5; y += 0.5) {
    if (fw.value(y) < 1.0) {
      EXPECT_NEAR(chi(fw.value(y)), fy.value(y), 1e-12) << y;
    }
  }
}

TEST(ToRmm, ExampleGenerators) {
  const auto f = to_rmm(extend_phi(DistributionFn::exponential(1.0), DistributionFn::dirac(1.0)));
  const auto g = to_rmm(extend_chi(DistributionFn::exponential(1.0), DistributionFn::dirac(1.0)));
  EXPECT_EQ(f.kind(), GeneratorKind::RmmF);
  EXPECT_EQ(g.kind(), GeneratorKind::RmmG);
  double err_f = 0.0, err_g = 0.0;
  for (double u : unit_points(1000)) {
    if (u == 0.0) continue;
    err_f = std::max(err_f, std::abs(f(u) - std::max(kC - u, 0.0)));
    err_g = std::max(err_g, std::abs(g(u) - std::max(kE1 - u, 0.0)));
  }
  EXPECT_LE(err_f, 1e-12);
  EXPECT_LE(err_g, 1e-12);
}

TEST(ToRmm, IdentityGivesZero) {
  const auto f = to_rmm(forms::identity(GeneratorKind::Phi));
  for (double u : unit_points(11)) EXPECT_EQ(f(u), 0.0);
  EXPECT_THROW(to_rmm(forms::identity(GeneratorKind::RmmF)), std::invalid_argument);
}

TEST(AuxiliaryMaps, StarSubstarDagger) {
  const auto phi = forms::max_linear(GeneratorKind::Phi, 0.5);
  EXPECT_DOUBLE_EQ(star(phi, 0.25).value(), 2.0);
  EXPECT_DOUBLE_EQ(star(phi, 0.8).value(), 1.0);
  EXPECT_TRUE(star(phi, 0.0).is_infinite());
  EXPECT_DOUBLE_EQ(star(forms::identity(GeneratorKind::Phi), 0.0).value(), 1.0);
  EXPECT_DOUBLE_EQ(dagger(phi, 0.25), 0.5);

  const auto chi = forms::min_linear(GeneratorKind::Chi, 0.5);
  EXPECT_TRUE(substar_chi(chi, 0.3).is_infinite());  // chi(v) = v
  EXPECT_DOUBLE_EQ(substar_chi(chi, 0.75).value(), 0.5 / 0.25);
  EXPECT_DOUBLE_EQ(substar_chi(chi, 1.0).value(), 1.0);
  EXPECT_DOUBLE_EQ(dagger(chi, 0.75), 0.5);
  EXPECT_THROW(dagger(chi, 1.0), std::domain_error);
  EXPECT_THROW(star(chi, 0.5), std::invalid_argument);
}

TEST(Validate, ExampleRmmGeneratorPasses) {
  const auto f = forms::truncated_linear(GeneratorKind::RmmF, kC);
  EXPECT_TRUE(validate(f, 1001).ok());
}

TEST(Validate, ParabolaRmmGeneratorPasses) {
  // f*(u) = 1 - u is decreasing and u + f(u) = 2u - u^2 is increasing
  EXPECT_TRUE(validate(forms::parabola(GeneratorKind::RmmF, 1.0), 1001).ok());
}

TEST(Validate, SquareAsRmmFailsEndpoint) {
  const auto rep = validate(forms::power(GeneratorKind::RmmF, 2.0), 1001);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.has("G1"));
}

TEST(Validate, SquareAsPhiFailsStarCondition) {
  const auto rep = validate(forms::power(GeneratorKind::Phi, 2.0), 1001);
  EXPECT_TRUE(rep.has("P3"));
  ASSERT_FALSE(rep.violations.empty());
  EXPECT_FALSE(rep.violations.front().witnesses.empty());
}

TEST(Validate, NonMonotoneTablePhiFails) {
  const auto phi = tabulated(GeneratorKind::Phi, {{0.0, 0.0}, {0.4, 0.7}, {0.6, 0.5}, {1.0, 1.0}});
  const auto rep = validate(phi, 1001);
  EXPECT_TRUE(rep.has("P1"));
}

TEST(Validate, ExtensionsOfModelsPass) {
  const auto fx = DistributionFn::uniform(0.5, 2.0), fz = DistributionFn::exponential(0.8);
  for (const auto& g : {extend_phi(fx, fz), extend_chi(fx, fz), to_rmm(extend_phi(fx, fz)), to_rmm(extend_chi(fx, fz))}) {
    const auto rep = validate(g, 2001);
    EXPECT_TRUE(rep.ok()) << g.describe() << " " << (rep.ok() ? "" : rep.violations.front().description);
  }
}

TEST(Forms, TruncatedLinear) {
  const auto f = forms::truncated_linear(GeneratorKind::RmmF, 0.6, 0.5);
  EXPECT_EQ(f(0.0), 0.0);
  EXPECT_DOUBLE_EQ(f(0.2), 0.2);
  EXPECT_EQ(f(0.7), 0.0);
  EXPECT_THROW(forms::truncated_linear(GeneratorKind::RmmF, 1.5), std::invalid_argument);
}

TEST(Forms, TabulateReproducesGenerator) {
  const auto phi = extend_phi(DistributionFn::exponential(1.0), DistributionFn::dirac(1.0));
  const auto t = tabulate(phi);
  for (double u : unit_points(333)) EXPECT_NEAR(t(u), phi(u), 1e-12) << u;
}
