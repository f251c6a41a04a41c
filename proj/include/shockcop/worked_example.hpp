#pragma once

// Exponential endogenous shocks with a common shock fixed at time 1:
// distributions, rmm generators, the precise rmm copula and the two bound
// copulas of the rate p-boxes, each checked against its closed form.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "shockcop/copulas.hpp"
#include "shockcop/distfn.hpp"
#include "shockcop/genfn.hpp"
#include "shockcop/imprecise.hpp"
#include "shockcop/io.hpp"
#include "shockcop/model.hpp"

namespace shockcop::example {

struct Params {
  double lambda1 = 1.0;
  double lambda2 = 2.0;
  double mu1 = 1.0;
  double mu2 = 2.0;
};

inline Params parse_params(const json& j) {
  Params p;
  auto get = [&](const char* key, double& dst) {
    if (j.contains(key)) dst = shockcop::detail::number(j.at(key), key);
  };
  get("lambda1", p.lambda1);
  get("lambda2", p.lambda2);
  get("mu1", p.mu1);
  get("mu2", p.mu2);
  return p;
}

/// Imprecise rmm model: X in the rate box [lambda1, lambda2], Y in [mu1, mu2],
/// Z at 1. Throws if a box is not ordered.
inline ShockModel imprecise_model(const Params& p) {
  if (!(p.lambda1 > 0 && p.lambda2 > 0 && p.mu1 > 0 && p.mu2 > 0)) {
    throw std::invalid_argument("rates must be positive");
  }
  if (p.lambda2 < p.lambda1) {
    throw std::invalid_argument("p-box for X is not ordered: lambda2 = " + format_double(p.lambda2) +
                                " < lambda1 = " + format_double(p.lambda1));
  }
  if (p.mu2 < p.mu1) {
    throw std::invalid_argument("p-box for Y is not ordered: mu2 = " + format_double(p.mu2) +
                                " < mu1 = " + format_double(p.mu1));
  }
  std::vector<PBox> boxes;
  boxes.emplace_back(DistributionFn::exponential(p.lambda1), DistributionFn::exponential(p.lambda2));
  boxes.emplace_back(DistributionFn::exponential(p.mu1), DistributionFn::exponential(p.mu2));
  return ShockModel(Family::Rmm, 1, std::move(boxes), DistributionFn::dirac(1.0));
}

/// Precise model with rates (lambda, mu).
inline ShockModel precise_model(double lambda, double mu) {
  return ShockModel::precise(Family::Rmm, 1, {DistributionFn::exponential(lambda), DistributionFn::exponential(mu)},
                             DistributionFn::dirac(1.0));
}

namespace closed {
// max{1 - e^-lambda - u, 0} on (0, 1]; generators vanish at 0.
inline double f(double lambda, double u) { return u <= 0.0 ? 0.0 : std::max(1.0 - std::exp(-lambda) - u, 0.0); }
inline double g(double mu, double w) { return w <= 0.0 ? 0.0 : std::max(std::exp(-mu) - w, 0.0); }

/// Three-case form of max{0, uw - f(u) g(w)}.
inline double copula(double lambda, double mu, double u, double w) {
  const double a = 1.0 - std::exp(-lambda);
  const double b = std::exp(-mu);
  if (u <= a && w <= b) {
    const double mid = b * u + a * w - b * a;
    return mid > 0.0 ? mid : 0.0;
  }
  return u * w;
}

/// G(x) = F_X(x) F_Z(x) with Z at 1.
inline double lifetime_max(double lambda, double x) { return x < 1.0 ? 0.0 : 1.0 - std::exp(-lambda * x); }
/// F_W(y) = 1 - (1 - F_Y(y))(1 - F_Z(y)) with Z at 1.
inline double lifetime_min(double mu, double y) {
  if (y < 0.0) return 0.0;
  return y < 1.0 ? 1.0 - std::exp(-mu * y) : 1.0;
}
}  // namespace closed

struct Check {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> files;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  json to_json() const {
    json j;
    j["pass"] = pass();
    j["checks"] = json::array();
    for (const auto& c : checks) {
      json e{{"name", c.name}, {"max_error", c.max_error}, {"tolerance", c.tolerance}, {"pass", c.pass}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      j["checks"].push_back(e);
    }
    j["files"] = files;
    return j;
  }
};

namespace detail {

/// Max abs error of `actual` against `expected` over `points`.
inline Check compare(std::string name, const std::vector<double>& points, const std::function<double(double)>& actual,
                     const std::function<double(double)>& expected, double tol) {
  Check c{std::move(name), 0.0, tol, true, {}};
  for (double t : points) {
    const double e = std::abs(actual(t) - expected(t));
    if (e > c.max_error) {
      c.max_error = e;
      c.detail = "worst at " + format_double(t);
    }
  }
  c.pass = c.max_error <= tol;
  return c;
}

inline std::vector<double> linspace(double a, double b, int k) {
  std::vector<double> out;
  for (int i = 0; i < k; ++i) out.push_back(a + (b - a) * i / (k - 1));
  return out;
}

}  // namespace detail

struct Artifacts {
  Generator f, g;                    // precise (lambda1, mu1)
  Generator f_lower, f_upper, g_lower, g_upper;
  GridSurface rmm_precise, rmm_lower, rmm_upper;
};

inline Artifacts build(const Params& p, int grid = 101) {
  const auto fz = DistributionFn::dirac(1.0);
  Artifacts a{to_rmm(extend_phi(DistributionFn::exponential(p.lambda1), fz)),
              to_rmm(extend_chi(DistributionFn::exponential(p.mu1), fz)),
              forms::identity(GeneratorKind::RmmF),
              forms::identity(GeneratorKind::RmmF),
              forms::identity(GeneratorKind::RmmG),
              forms::identity(GeneratorKind::RmmG),
              {},
              {},
              {}};
  const auto bf = build_bounds(imprecise_model(p));
  a.f_lower = bf.lower_gen[0];
  a.f_upper = bf.upper_gen[0];
  a.g_lower = bf.lower_gen[1];
  a.g_upper = bf.upper_gen[1];
  const auto axes = std::vector<std::vector<double>>{unit_axis(grid), unit_axis(grid)};
  a.rmm_precise = make_surface(axes, [&](const Point& u) { return rmm2(a.f, a.g, u[0], u[1]); }, {"", "rmm", "precise"});
  a.rmm_lower = make_surface(
      axes, [&](const Point& u) { return rmm2(a.f_lower, a.g_lower, u[0], u[1]); }, {"", "rmm", "lower"});
  a.rmm_upper = make_surface(
      axes, [&](const Point& u) { return rmm2(a.f_upper, a.g_upper, u[0], u[1]); }, {"", "rmm", "upper"});
  return a;
}

/// Rebuilds every object of the example and checks it against its closed
/// form. Writes six CSV fixtures into `out_dir` when it is non-empty.
inline Report run(const Params& p, const std::string& out_dir = {}) {
  Report rep;
  const double tol = 1e-12;
  const auto us = detail::linspace(0.0, 1.0, 1000);
  const auto xs = detail::linspace(-1.0, 4.0, 1001);

  const auto fx = DistributionFn::exponential(p.lambda1);
  const auto fy = DistributionFn::exponential(p.mu1);
  const auto fz = DistributionFn::dirac(1.0);
  const auto fu = lifetime_max(fx, fz);
  const auto fw = lifetime_min(fy, fz);

  rep.checks.push_back(detail::compare(
      "F_Z is the unit step at 1", xs, [&](double x) { return fz.value(x); },
      [](double x) { return x < 1.0 ? 0.0 : 1.0; }, 0.0));
  rep.checks.push_back(detail::compare(
      "F_U = F_X F_Z", xs, [&](double x) { return fu.value(x); },
      [&](double x) { return closed::lifetime_max(p.lambda1, x); }, tol));
  rep.checks.push_back(detail::compare(
      "F_W = 1 - (1 - F_Y)(1 - F_Z)", xs, [&](double y) { return fw.value(y); },
      [&](double y) { return closed::lifetime_min(p.mu1, y); }, tol));

  const Artifacts a = build(p);
  rep.checks.push_back(detail::compare(
      "f(u) = max{1 - e^-lambda - u, 0}", us, [&](double u) { return a.f(u); },
      [&](double u) { return closed::f(p.lambda1, u); }, tol));
  rep.checks.push_back(detail::compare(
      "g(w) = max{e^-mu - w, 0}", us, [&](double w) { return a.g(w); },
      [&](double w) { return closed::g(p.mu1, w); }, tol));
  rep.checks.push_back(detail::compare(
      "lower f from lambda1", us, [&](double u) { return a.f_lower(u); },
      [&](double u) { return closed::f(p.lambda1, u); }, tol));
  rep.checks.push_back(detail::compare(
      "upper f from lambda2", us, [&](double u) { return a.f_upper(u); },
      [&](double u) { return closed::f(p.lambda2, u); }, tol));
  rep.checks.push_back(detail::compare(
      "lower g from mu2", us, [&](double w) { return a.g_lower(w); },
      [&](double w) { return closed::g(p.mu2, w); }, tol));
  rep.checks.push_back(detail::compare(
      "upper g from mu1", us, [&](double w) { return a.g_upper(w); },
      [&](double w) { return closed::g(p.mu1, w); }, tol));

  auto surface_check = [&](std::string name, const GridSurface& s, double lambda, double mu) {
    Check c{std::move(name), 0.0, tol, true, {}};
    for (std::size_t k = 0; k < s.values.size(); ++k) {
      const auto u = s.point(k);
      const double e = std::abs(s.values[k] - closed::copula(lambda, mu, u[0], u[1]));
      if (e > c.max_error) {
        c.max_error = e;
        c.detail = "worst at (" + format_double(u[0]) + ", " + format_double(u[1]) + ")";
      }
    }
    c.pass = c.max_error <= tol;
    rep.checks.push_back(c);
  };
  surface_check("precise rmm copula matches the three-case form", a.rmm_precise, p.lambda1, p.mu1);
  surface_check("lower-generator copula matches the three-case form", a.rmm_lower, p.lambda1, p.mu2);
  surface_check("upper-generator copula matches the three-case form", a.rmm_upper, p.lambda2, p.mu1);

  {
    Check c{"lower-generator copula dominates upper-generator copula", 0.0, tol, true, {}};
    std::size_t strict = 0;
    for (std::size_t k = 0; k < a.rmm_lower.values.size(); ++k) {
      const double d = a.rmm_lower.values[k] - a.rmm_upper.values[k];
      if (-d > c.max_error) c.max_error = -d;
      if (d > tol) ++strict;
    }
    c.pass = c.max_error <= tol && (strict > 0 || (p.lambda1 == p.lambda2 && p.mu1 == p.mu2));
    c.detail = std::to_string(strict) + " strict grid points";
    rep.checks.push_back(c);
  }

  {
    const auto model = precise_model(p.lambda1, p.mu1);
    const ComposedModel cm(model);
    Check c{"H^sigma vanishes for x <= y and factorizes for x > y", 0.0, tol, true, {}};
    for (double x : detail::linspace(0.0, 3.0, 61)) {
      for (double y : detail::linspace(0.0, 3.0, 61)) {
        const double expect = x > y ? fx.value(x) * (1.0 - fy.value(y)) * (fz.value(x) - fz.value(y)) : 0.0;
        const double e = std::abs(cm.joint({x, y}) - expect);
        c.max_error = std::max(c.max_error, e);
      }
    }
    c.pass = c.max_error <= tol;
    rep.checks.push_back(c);
  }

  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto put = [&](const std::string& name, const std::string& content) {
      const auto path = (fs::path(out_dir) / name).string();
      write_file(path, content);
      rep.files.push_back(path);
    };
    {
      std::ostringstream os;
      os << "x,F_X,F_Y,F_Z,F_U,F_W\n";
      for (double x : xs) {
        os << format_double(x) << ',' << format_double(fx.value(x)) << ',' << format_double(fy.value(x)) << ','
           << format_double(fz.value(x)) << ',' << format_double(fu.value(x)) << ',' << format_double(fw.value(x))
           << '\n';
      }
      put("distributions.csv", os.str());
    }
    {
      std::ostringstream os;
      os << "u,f,g\n";
      for (double u : us) os << format_double(u) << ',' << format_double(a.f(u)) << ',' << format_double(a.g(u)) << '\n';
      put("f_g.csv", os.str());
    }
    {
      std::ostringstream os;
      os << "u,f_lower,f_upper,g_lower,g_upper\n";
      for (double u : us) {
        os << format_double(u) << ',' << format_double(a.f_lower(u)) << ',' << format_double(a.f_upper(u)) << ','
           << format_double(a.g_lower(u)) << ',' << format_double(a.g_upper(u)) << '\n';
      }
      put("bound_generators.csv", os.str());
    }
    auto put_surface = [&](const std::string& name, const GridSurface& s) {
      std::ostringstream os;
      write_csv(os, s);
      put(name, os.str());
    };
    put_surface("rmm_precise.csv", a.rmm_precise);
    put_surface("rmm_lower.csv", a.rmm_lower);
    put_surface("rmm_upper.csv", a.rmm_upper);
  }
  return rep;
}

}  // namespace shockcop::example
