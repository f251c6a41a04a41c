#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "shockcop/shockcop.hpp"

using namespace shockcop;

TEST(Numbers, ShortestRoundTrip) {
  Rng rng(1);
  for (int k = 0; k < 10000; ++k) {
    const double v = std::ldexp(rng.uniform(), rng.integer(-40, 40));
    const auto s = format_double(v);
    ASSERT_EQ(parse_double(s), v) << s;
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(parse_double("-inf"), -kInfinity);
  EXPECT_THROW(parse_double("1.5x"), ConfigError);
}

TEST(Parse, Distributions) {
  const auto d = parse_distribution(json::parse(R"({"kind":"discrete","points":[[0,0.5],[2,0.5]]})"));
  EXPECT_DOUBLE_EQ(d.value(1.0), 0.5);
  const auto m = parse_distribution(json::parse(
      R"({"kind":"mixture","weight":0.5,"left":{"kind":"dirac","location":"-inf"},"right":{"kind":"exponential","rate":1}})"));
  EXPECT_NEAR(m.value(-1.0), 0.5, 1e-15);
  const auto p = parse_distribution(
      json::parse(R"({"kind":"pwl","breakpoints":[[0,0,0,0.25],[1,0.75,1,1]]})"));
  EXPECT_NEAR(p.value(0.5), 0.5, 1e-15);
  EXPECT_THROW(parse_distribution(json::parse(R"({"kind":"gamma"})")), ConfigError);
  EXPECT_THROW(parse_distribution(json::parse(R"({"kind":"exponential"})")), ConfigError);
  EXPECT_THROW(parse_distribution(json::parse(R"({"kind":"exponential","rate":-1})")), ConfigError);
}

TEST(Parse, GeneratorFromShocks) {
  const auto g = parse_generator(json::parse(
      R"({"kind":"rmm_f","from_shocks":{"x":{"kind":"exponential","rate":1},"z":{"kind":"dirac","location":1}}})"));
  EXPECT_EQ(g.kind(), GeneratorKind::RmmF);
  EXPECT_NEAR(g(0.2), 1.0 - std::exp(-1.0) - 0.2, 1e-12);
}

TEST(Parse, ModelAndFamilyOverride) {
  const auto j = json::parse(R"({
    "family": "rmm", "p": 1,
    "endogenous": [{"kind":"exponential","rate":1},{"lower":{"kind":"exponential","rate":1},"upper":{"kind":"exponential","rate":2}}],
    "exogenous": {"kind":"dirac","location":1}})");
  const auto m = parse_model(j);
  EXPECT_EQ(m.family(), Family::Rmm);
  EXPECT_FALSE(m.is_precise());
  EXPECT_THROW(parse_model(j, Family::Marshall), ConfigError);
  EXPECT_NO_THROW(parse_model(j, Family::Rmm));
  auto bad = j;
  bad["n"] = 3;
  EXPECT_THROW(parse_model(bad), ConfigError);
  auto crossed = j;
  crossed["endogenous"][1]["lower"]["rate"] = 3;
  EXPECT_THROW(parse_model(crossed), ConfigError);
}

TEST(Parse, ModelHashIsStable) {
  const auto a = json::parse(R"({"lambda1":1,"lambda2":2})");
  const auto b = json::parse(R"({"lambda2":2, "lambda1":1})");
  EXPECT_EQ(model_hash(a), model_hash(b));
  EXPECT_EQ(model_hash(a).size(), 16u);
  EXPECT_NE(model_hash(a), model_hash(json::parse(R"({"lambda1":1,"lambda2":3})")));
}

TEST(Surface, CsvRoundTripIsBitExact) {
  const auto surf = compute_surface(json::parse(R"({"lambda1":1,"lambda2":2,"mu1":1,"mu2":2})"), std::nullopt,
                                    BoundLevel::Lower, 37);
  std::stringstream ss;
  write_csv(ss, surf);
  const auto table = read_csv(ss);
  ASSERT_EQ(table.header, (std::vector<std::string>{"u1", "u2", "value"}));
  ASSERT_EQ(table.rows.size(), surf.values.size());
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto p = surf.point(k);
    ASSERT_EQ(table.rows[k][0], p[0]);
    ASSERT_EQ(table.rows[k][1], p[1]);
    ASSERT_EQ(table.rows[k][2], surf.values[k]);
  }
}

TEST(Surface, ExampleMatchesClosedForm) {
  const json cfg{{"lambda1", 1}, {"lambda2", 1}, {"mu1", 1}, {"mu2", 1}};
  const auto surf = compute_surface(cfg, Family::Rmm, BoundLevel::Lower, 101);
  for (std::size_t k = 0; k < surf.values.size(); ++k) {
    const auto p = surf.point(k);
    ASSERT_NEAR(surf.values[k], example::closed::copula(1.0, 1.0, p[0], p[1]), 1e-12);
  }
}

TEST(Surface, ThreadCountDoesNotChangeValues) {
  const json cfg{{"lambda1", 1}, {"lambda2", 2}, {"mu1", 1}, {"mu2", 2}};
  const auto a = compute_surface(cfg, std::nullopt, BoundLevel::EnvelopeSup, 101, 1);
  const auto b = compute_surface(cfg, std::nullopt, BoundLevel::EnvelopeSup, 101, 4);
  EXPECT_EQ(a.values, b.values);
}

TEST(Surface, LevelRules) {
  const json ex{{"lambda1", 1}, {"lambda2", 2}, {"mu1", 1}, {"mu2", 2}};
  EXPECT_THROW(compute_surface(ex, std::nullopt, BoundLevel::Precise, 5), ConfigError);
  EXPECT_THROW(compute_surface(ex, Family::MaxMin, BoundLevel::Lower, 5), ConfigError);
  const json gens = json::parse(R"({"family":"marshall","generators":[{"kind":"phi","form":"identity"},{"kind":"psi","form":"identity"}]})");
  const auto s = compute_surface(gens, std::nullopt, BoundLevel::Precise, 3);
  EXPECT_EQ(s.values.size(), 9u);
  EXPECT_NEAR(s.values[4], 0.25, 1e-15);
  EXPECT_THROW(compute_surface(gens, std::nullopt, BoundLevel::Upper, 3), ConfigError);
  EXPECT_THROW(parse_bound_level("middle"), ConfigError);
}

TEST(WorkedExample, ReportPassesAndRejectsBadOrder) {
  const auto rep = example::run({1.0, 2.0, 1.0, 2.0});
  EXPECT_TRUE(rep.pass());
  EXPECT_THROW(example::imprecise_model({2.0, 1.0, 1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(example::imprecise_model({1.0, 2.0, 0.0, 2.0}), std::invalid_argument);
}

TEST(WorkedExample, PerturbedRateMovesThreshold) {
  const auto art = example::build({1.7, 2.0, 1.0, 2.0}, 11);
  const double c = 1.0 - std::exp(-1.7);
  EXPECT_NEAR(art.f_lower(c - 0.1), 0.1, 1e-12);
  EXPECT_EQ(art.f_lower(c + 0.01), 0.0);
}
