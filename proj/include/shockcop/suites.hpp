#pragma once

// Verification suites. Every check draws its instances from a seeded Rng and
// reports {check, instances, failures:[{model, point, expected, actual}]}.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shockcop/copulas.hpp"
#include "shockcop/distfn.hpp"
#include "shockcop/genfn.hpp"
#include "shockcop/imprecise.hpp"
#include "shockcop/instances.hpp"
#include "shockcop/io.hpp"
#include "shockcop/model.hpp"
#include "shockcop/verify.hpp"
#include "shockcop/worked_example.hpp"

namespace shockcop::suites {

inline constexpr std::size_t kMaxRecordedFailures = 20;

struct Failure {
  std::string model;
  Point point;
  double expected = 0.0;
  double actual = 0.0;
};

struct CheckResult {
  std::string check;
  std::size_t instances = 0;
  std::size_t evaluations = 0;
  std::vector<Failure> failures;
  std::size_t failure_count = 0;
  bool informational = false;  // reported, never fails the suite
  std::string note;
  double seconds = 0.0;

  bool pass() const { return failure_count == 0; }

  void fail(const std::string& model, Point point, double expected, double actual) {
    ++failure_count;
    if (failures.size() < kMaxRecordedFailures) failures.push_back({model, std::move(point), expected, actual});
  }

  bool near(const std::string& model, const Point& point, double expected, double actual, double tol) {
    ++evaluations;
    if (std::abs(actual - expected) <= tol) return true;
    fail(model, point, expected, actual);
    return false;
  }

  /// Relative comparison with scale max(1, |expected|).
  bool near_rel(const std::string& model, const Point& point, double expected, double actual, double tol) {
    return near(model, point, expected, actual, tol * std::max(1.0, std::abs(expected)));
  }

  /// Passes when `expected` is within tol of `actual` or of the range [lo, hi]
  /// reached from inputs perturbed by rounding.
  bool near_range(const std::string& model, const Point& point, double expected, double actual, double lo, double hi,
                  double tol) {
    ++evaluations;
    if (std::abs(actual - expected) <= tol || (expected >= lo - tol && expected <= hi + tol)) return true;
    fail(model, point, expected, actual);
    return false;
  }

  bool at_most(const std::string& model, const Point& point, double bound, double actual, double tol) {
    ++evaluations;
    if (actual <= bound + tol) return true;
    fail(model, point, bound, actual);
    return false;
  }

  bool at_least(const std::string& model, const Point& point, double bound, double actual, double tol) {
    ++evaluations;
    if (actual >= bound - tol) return true;
    fail(model, point, bound, actual);
    return false;
  }

  json to_json() const {
    json j;
    j["check"] = check;
    j["instances"] = instances;
    j["evaluations"] = evaluations;
    j["failures"] = json::array();
    for (const auto& f : failures) {
      j["failures"].push_back({{"model", f.model}, {"point", f.point}, {"expected", f.expected}, {"actual", f.actual}});
    }
    j["failure_count"] = failure_count;
    j["informational"] = informational;
    j["pass"] = pass();
    j["seconds"] = seconds;
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.informational || c.pass(); });
  }

  json to_json() const {
    json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["pass"] = pass();
    j["checks"] = json::array();
    for (const auto& c : checks) j["checks"].push_back(c.to_json());
    return j;
  }
};

namespace detail {

// Range of fn over arguments within a few ulps of 1 around `arg`, clamped to
// [0, 1]; arguments such as 1 - G carry that much rounding.
template <typename Fn>
std::pair<double, double> rounding_range(const Fn& fn, double arg) {
  const double d = 4.0 * std::numeric_limits<double>::epsilon();
  double lo = kInfinity, hi = -kInfinity;
  for (double a : {arg - d, arg, arg + d}) {
    const double v = fn(std::clamp(a, 0.0, 1.0));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

inline Rng check_rng(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return Rng(Rng::stream_seed(seed, h));
}

template <typename Fn>
CheckResult timed(std::string name, Fn&& body) {
  CheckResult r;
  r.check = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string describe(const ShockModel& m) {
  std::string s = to_string(m.family()) + " n=" + std::to_string(m.n()) + " p=" + std::to_string(m.p());
  for (int i = 0; i < m.n(); ++i) {
    const auto& b = m.component(i);
    s += " X" + std::to_string(i + 1) + "=";
    s += b.is_degenerate() ? b.lower().describe() : "[" + b.lower().describe() + "; " + b.upper().describe() + "]";
  }
  return s + " Z=" + m.exogenous().describe();
}

inline std::string describe(const GeneratorVector& gv) {
  std::string s = to_string(gv.family()) + " p=" + std::to_string(gv.p());
  for (const auto& g : gv.generators()) s += " " + g.describe();
  return s;
}

inline std::string describe(const BoundFamily& bf) {
  return "lower{" + describe(bf.lower_gen) + "} upper{" + describe(bf.upper_gen) + "}";
}

inline void absorb(CheckResult& r, const GridCheckReport& rep, const std::string& label) {
  r.evaluations += rep.points;
  for (const auto& f : rep.failures) r.fail(label + " [" + f.property + "]", f.point, f.expected, f.actual);
  if (rep.failure_count > rep.failures.size()) r.failure_count += rep.failure_count - rep.failures.size();
}

inline void absorb(CheckResult& r, const ValidationReport& rep, const std::string& label) {
  r.evaluations += rep.points_checked;
  for (const auto& v : rep.violations) {
    r.fail(label + " " + v.condition + ": " + v.description, v.witnesses, 0.0, static_cast<double>(v.count));
  }
}

/// Grid size keeping a full grid scan near 10^4 points.
inline int grid_for(int n) { return n <= 2 ? 101 : n == 3 ? 21 : n == 4 ? 9 : 6; }

/// Interior members of an imprecise model, one component list each.
inline std::vector<ShockModel> members(Rng& rng, const ShockModel& model, int count) {
  std::vector<ShockModel> out;
  for (int k = 0; k < count; ++k) out.push_back(model.member(instances::random_member(rng, model)));
  return out;
}

inline double member_joint(const ShockModel& m, const Point& x) {
  switch (m.family()) {
    case Family::Marshall: return joint_marshall_H(m, x);
    case Family::MaxMin: return joint_maxmin_H(m, x);
    case Family::Rmm: return joint_rmm_Hsigma_direct(m, x);
  }
  throw std::logic_error("unreachable");
}

inline Interval H_bounds(const BoundFamily& bf, const Point& x) {
  switch (bf.family) {
    case Family::Marshall: return marshall_H_bounds(bf, x);
    case Family::MaxMin: return maxmin_H_bounds(bf, x);
    case Family::Rmm: return rmm_H_bounds(bf, x);
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

// ===========================================================================
// Axioms

/// Grounded margins, uniform margins and non-negative cell volumes on a full
/// grid, for random valid generator vectors of one family.
inline CheckResult copula_axioms(Family family, int n, int count = 50, int grid = 21, std::uint64_t seed = 1) {
  const std::string name = "copula_axioms_" + to_string(family) + "_n" + std::to_string(n);
  return detail::timed(name, [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, name);
    for (int k = 0; k < count; ++k) {
      const auto gv = instances::random_generator_vector(rng, family, n);
      const auto rep = check_copula([&](const Point& u) { return copula(gv, u); }, n, grid, 1e-12);
      ++r.instances;
      detail::absorb(r, rep, detail::describe(gv));
    }
  });
}

/// Extension generators of random discrete and p-box models and random
/// truncated-linear generators satisfy their condition sets.
inline CheckResult generator_conditions(int count = 60, int samples = 1001, std::uint64_t seed = 1) {
  return detail::timed("generator_conditions", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    const Family families[] = {Family::Marshall, Family::MaxMin, Family::Rmm};
    for (int k = 0; k < count; ++k) {
      const Family fam = families[k % 3];
      std::vector<Generator> gens;
      switch ((k / 3) % 3) {
        case 0: gens = instances::random_generator_vector(rng, fam, rng.integer(2, 4)).generators(); break;
        case 1: {
          const auto bf = build_bounds(instances::random_pbox_model(rng, fam, rng.integer(2, 4)));
          gens = bf.lower_gen.generators();
          for (const auto& g : bf.upper_gen.generators()) gens.push_back(g);
          break;
        }
        default:
          gens.push_back(instances::random_truncated_linear(rng, GeneratorKind::RmmF));
          gens.push_back(instances::random_truncated_linear(rng, GeneratorKind::RmmG));
      }
      for (const auto& g : gens) {
        ++r.instances;
        detail::absorb(r, validate(g, samples), g.describe());
      }
    }
  });
}

/// validate() flags each deliberately broken generator with the expected condition.
inline CheckResult validation_rejects_invalid() {
  return detail::timed("validation_rejects_invalid", [&](CheckResult& r) {
    struct Case {
      Generator gen;
      const char* condition;
    };
    const std::vector<Case> cases{
        {forms::power(GeneratorKind::Phi, 2.0), "P3"},
        {forms::power(GeneratorKind::RmmF, 2.0), "G1"},
        {tabulated(GeneratorKind::Phi, {{0, 0}, {0.3, 0.6}, {0.6, 0.4}, {1, 1}}), "P1"},
        {tabulated(GeneratorKind::Chi, {{0, 0}, {0.3, 0.2}, {0.6, 0.1}, {1, 1}}), "F2"},
        {tabulated(GeneratorKind::RmmG, {{0, 0}, {0, 0.8}, {0.4, 0}, {1, 0}}), "G2"},
        {forms::identity(GeneratorKind::RmmF), "G1"},
    };
    for (const auto& c : cases) {
      ++r.instances;
      ++r.evaluations;
      const auto rep = validate(c.gen, 257);
      if (!rep.has(c.condition)) r.fail(c.gen.describe() + " not flagged " + c.condition, {}, 1.0, 0.0);
    }
  });
}

/// n-variate formulas at n = 2 agree with the bivariate ones on a 101^2 grid.
inline CheckResult family_consistency(int count = 10, int grid = 101, std::uint64_t seed = 1) {
  return detail::timed("family_consistency", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    const auto axis = unit_axis(grid);
    const double tol = 1e-14;
    for (int k = 0; k < count; ++k) {
      const auto gm = instances::random_generator_vector(rng, Family::Marshall, 2);
      const auto gx = instances::random_generator_vector(rng, Family::MaxMin, 2);
      const auto gr = instances::random_generator_vector(rng, Family::Rmm, 2);
      const auto lm = detail::describe(gm), lx = detail::describe(gx), lr = detail::describe(gr);
      r.instances += 3;
      for (double u : axis) {
        for (double v : axis) {
          const Point pt{u, v};
          const double m2 = marshall2(gm[0], gm[1], u, v);
          r.near(lm + " marshall_n", pt, m2, marshall_n(gm, pt), tol);
          r.near(lm + " second form", pt, m2, marshall2_alt(gm[0], gm[1], u, v), tol);
          r.near(lx, pt, maxmin2(gx[0], gx[1], u, v), maxmin_n(gx, pt), tol);
          r.near(lr, pt, rmm2(gr[0], gr[1], u, v), rmm_n(gr, pt), tol);
        }
      }
    }
  });
}

namespace detail {
inline std::vector<double> distribution_probe(const DistributionFn& f, Rng& rng, int count) {
  double lo = f.lower_quantile(0.001), hi = f.upper_quantile(0.999);
  if (!std::isfinite(lo)) lo = -5.0;
  if (!std::isfinite(hi)) hi = 5.0;
  lo -= 0.5;
  hi += 0.5;
  std::vector<double> xs;
  for (double b : f.breakpoints()) {
    xs.push_back(b);
    xs.push_back(std::nextafter(b, -kInfinity));
    xs.push_back(std::nextafter(b, kInfinity));
  }
  while (static_cast<int>(xs.size()) < count) xs.push_back(rng.uniform(lo, hi));
  std::sort(xs.begin(), xs.end());
  return xs;
}
}  // namespace detail

/// Limits bracket values, monotonicity on sorted samples, tail values,
/// survival involution, and lifetime transforms against enumeration.
inline CheckResult distfn_invariants(int count = 200, int samples = 1000, std::uint64_t seed = 1) {
  return detail::timed("distfn_invariants", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    for (int k = 0; k < count; ++k) {
      const auto f = instances::random_distribution(rng, 1);
      const auto label = f.describe();
      ++r.instances;
      r.near(label + " F(-inf)", {-kInfinity}, 0.0, f.value(-kInfinity), 0.0);
      r.near(label + " F(+inf)", {kInfinity}, 1.0, f.value(kInfinity), 0.0);
      const auto xs = detail::distribution_probe(f, rng, samples);
      const SurvivalView<SurvivalView<DistributionFn>> twice(survival(f));
      double prev = 0.0;
      for (double x : xs) {
        const double l = f.left_limit(x), v = f.value(x), rt = f.right_limit(x);
        r.at_least(label + " left >= 0", {x}, 0.0, l, 0.0);
        r.at_most(label + " left <= value", {x}, v, l, 0.0);
        r.at_most(label + " value <= right", {x}, rt, v, 0.0);
        r.at_most(label + " right <= 1", {x}, 1.0, rt, 0.0);
        r.at_least(label + " monotone", {x}, prev, v, 0.0);
        r.near(label + " survival involution", {x}, v, twice(x), 1e-15);
        prev = v;
      }
    }
    // lifetime transforms of discrete pairs against enumeration of max/min
    for (int k = 0; k < count / 4; ++k) {
      const auto a = instances::random_lattice_discrete(rng), b = instances::random_lattice_discrete(rng);
      const auto mx = lifetime_max(a, b), mn = lifetime_min(a, b);
      const auto label = a.describe() + " with " + b.describe();
      const auto sa = *a.atoms(), sb = *b.atoms();
      ++r.instances;
      for (int h = -2; h <= 12; ++h) {
        const double x = 0.5 * h;
        double pmax = 0.0, pmin = 0.0;
        for (const auto& s : sa) {
          for (const auto& t : sb) {
            if (std::max(s.location, t.location) <= x) pmax += s.mass * t.mass;
            if (std::min(s.location, t.location) <= x) pmin += s.mass * t.mass;
          }
        }
        r.near(label + " lifetime_max", {x}, pmax, mx.value(x), 1e-12);
        r.near(label + " lifetime_min", {x}, pmin, mn.value(x), 1e-12);
      }
    }
  });
}

/// Reduced-set envelope surfaces of random rmm bounds are quasi-copulas.
inline CheckResult envelope_quasicopula(int n, int count = 10, std::uint64_t seed = 1) {
  const std::string name = "envelope_quasicopula_n" + std::to_string(n);
  return detail::timed(name, [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, name);
    const int grid = n == 2 ? 51 : 15;
    for (int k = 0; k < count; ++k) {
      const auto bf = instances::random_rmm_bounds(rng, n);
      const auto label = detail::describe(bf);
      ++r.instances;
      detail::absorb(r, check_quasicopula([&](const Point& u) { return rmm_envelope_reduced(bf, u).lower; }, n, grid),
                     label + " inf");
      detail::absorb(r, check_quasicopula([&](const Point& u) { return rmm_envelope_reduced(bf, u).upper; }, n, grid),
                     label + " sup");
    }
  });
}

/// Informational: cell volumes of the envelope surfaces (not expected to be copulas).
inline CheckResult envelope_n_increasing(int count = 10, std::uint64_t seed = 1) {
  return detail::timed("envelope_n_increasing", [&](CheckResult& r) {
    r.informational = true;
    auto rng = detail::check_rng(seed, r.check);
    std::size_t negative = 0;
    for (int k = 0; k < count; ++k) {
      const int n = 2 + k % 2;
      const auto bf = instances::random_rmm_bounds(rng, n);
      const auto label = detail::describe(bf);
      ++r.instances;
      const int grid = n == 2 ? 51 : 15;
      const auto inf = check_copula([&](const Point& u) { return rmm_envelope_reduced(bf, u).lower; }, n, grid);
      const auto sup = check_copula([&](const Point& u) { return rmm_envelope_reduced(bf, u).upper; }, n, grid);
      negative += inf.failure_count + sup.failure_count;
      detail::absorb(r, inf, label + " inf");
      detail::absorb(r, sup, label + " sup");
    }
    r.note = std::to_string(negative) + " grid cells with negative volume (counterexample rectangles listed)";
  });
}

/// Informational: x0 choice and continuity diagnostics of extension generators.
inline CheckResult extension_diagnostics(int count = 30, int samples = 1001, std::uint64_t seed = 1) {
  return detail::timed("extension_diagnostics", [&](CheckResult& r) {
    r.informational = true;
    auto rng = detail::check_rng(seed, r.check);
    double worst_x0 = 0.0, worst_gap = 0.0;
    for (int k = 0; k < count; ++k) {
      const auto box = instances::random_pbox(rng);
      const auto z = k % 2 ? instances::random_exogenous(rng) : instances::random_lattice_discrete(rng);
      for (const auto& g : {extend_phi(box.lower(), z), extend_chi(box.upper(), z)}) {
        ++r.instances;
        const auto rep = validate(g, samples);
        r.evaluations += rep.points_checked;
        worst_x0 = std::max(worst_x0, rep.x0_discrepancy);
        worst_gap = std::max(worst_gap, rep.continuity_gap);
        if (rep.x0_discrepancy > 1e-12) r.fail(g.describe() + " x0 choice", {rep.x0_location}, 0.0, rep.x0_discrepancy);
        if (rep.continuity_gap > 1e-6) r.fail(g.describe() + " jump", {rep.continuity_location}, 0.0, rep.continuity_gap);
      }
    }
    r.note = "largest x0 discrepancy " + format_double(worst_x0) + ", largest jump away from the excluded endpoint " + format_double(worst_gap);
  });
}

/// Checks on user-supplied generators or models from a config.
inline std::vector<CheckResult> user_config_checks(const json& config) {
  std::vector<CheckResult> out;
  auto axioms = [&](const GeneratorVector& gv, const std::string& label, CheckResult& r) {
    const int n = gv.n();
    if (n > 5) return;
    ++r.instances;
    detail::absorb(r, check_copula([&](const Point& u) { return copula(gv, u); }, n, n == 2 ? 51 : detail::grid_for(n)),
                   label);
  };
  if (config.contains("generators")) {
    const auto gv = parse_generator_vector(config);
    out.push_back(detail::timed("config_generator_conditions", [&](CheckResult& r) {
      for (const auto& g : gv.generators()) {
        ++r.instances;
        detail::absorb(r, validate(g, 1001), g.describe());
      }
    }));
    out.push_back(detail::timed("config_copula_axioms",
                                [&](CheckResult& r) { axioms(gv, detail::describe(gv), r); }));
  } else if (config.contains("endogenous")) {
    const auto model = parse_model(config);
    const auto bf = build_bounds(model);
    out.push_back(detail::timed("config_generator_conditions", [&](CheckResult& r) {
      for (const auto* gv : {&bf.lower_gen, &bf.upper_gen}) {
        for (const auto& g : gv->generators()) {
          ++r.instances;
          detail::absorb(r, validate(g, 1001), g.describe());
        }
      }
    }));
    out.push_back(detail::timed("config_copula_axioms", [&](CheckResult& r) {
      axioms(bf.lower_gen, "lower " + detail::describe(bf.lower_gen), r);
      axioms(bf.upper_gen, "upper " + detail::describe(bf.upper_gen), r);
    }));
  }
  return out;
}

// ===========================================================================
// Oracles

inline CheckResult oracle_total_probability(int count = 100, std::uint64_t seed = 1) {
  return detail::timed("oracle_total_probability", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    const Family families[] = {Family::Marshall, Family::MaxMin, Family::Rmm};
    for (int k = 0; k < count; ++k) {
      const auto model = instances::random_discrete_model(rng, families[k % 3], 2 + k % 3);
      const DiscreteModelOracle oracle(model);
      ++r.instances;
      r.near(detail::describe(model), {}, 1.0, oracle.total_probability(), 1e-12);
    }
  });
}

/// Exact enumeration against the copula composed with the lifetimes and
/// against the direct joint formula, for random all-discrete models.
inline CheckResult oracle_equivalence(Family family, int count = 100, int points = 50, std::uint64_t seed = 1) {
  const std::string name = "oracle_equivalence_" + to_string(family);
  return detail::timed(name, [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, name);
    const bool reflected = family == Family::Rmm;
    for (int k = 0; k < count; ++k) {
      const int n = 2 + k % 3;
      const auto model = instances::random_discrete_model(rng, family, n);
      const DiscreteModelOracle oracle(model);
      const ComposedModel composed(model);
      const auto label = detail::describe(model);
      ++r.instances;
      for (int t = 0; t < points; ++t) {
        Point x = instances::random_lattice_point(rng, n);
        if (t % 3 == 2) {
          for (auto& v : x) v = rng.uniform(-0.5, 5.5);
        }
        const double exact = oracle.exact_joint(x, reflected);
        r.near(label + " composed", x, exact, composed.joint(x), 1e-12);
        r.near(label + " direct", x, exact, detail::member_joint(model, x), 1e-12);
      }
    }
  });
}

/// phi(F_U) = F_X, chi(F_W) = F_Y and the rmm product relations at sampled x.
inline CheckResult defining_relations(int count = 100, int samples = 1000, std::uint64_t seed = 1) {
  return detail::timed("defining_relations", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    const double tol = 1e-12;
    for (int k = 0; k < count; ++k) {
      DistributionFn fx = instances::random_lattice_discrete(rng);
      DistributionFn fz = instances::random_lattice_discrete(rng);
      if (k % 2) {
        fx = instances::random_pbox(rng).lower();
        fz = instances::random_exogenous(rng);
      }
      const auto phi = extend_phi(fx, fz), psi = extend_psi(fx, fz), chi = extend_chi(fx, fz);
      const auto f = to_rmm(phi), g = to_rmm(chi);
      const auto label = fx.describe() + " with Z=" + fz.describe();
      const instances::PointSampler sampler(ShockModel::precise(Family::MaxMin, 1, {fx, fx}, fz));
      ++r.instances;
      for (int t = 0; t < samples; ++t) {
        const double x = sampler(rng)[0];
        const double a = fx.value(x), z = fz.value(x);
        const double fu = a * z;
        if (fu > 0.0) {
          r.near(label + " phi(F_U)=F_X", {x}, a, phi(fu), tol);
          r.near(label + " psi(F_V)=F_Y", {x}, a, psi(fu), tol);
          r.near(label + " f(F_X F_Z)=F_X(1-F_Z)", {x}, a * (1.0 - z), f(fu), tol);
        }
        const double sw = (1.0 - a) * (1.0 - z);
        if (sw > 0.0) {
          const auto [clo, chi_hi] = detail::rounding_range(chi, 1.0 - sw);
          r.near_range(label + " chi(F_W)=F_Y", {x}, a, chi(1.0 - sw), clo, chi_hi, tol);
          const auto [glo, ghi] = detail::rounding_range(g, sw);
          r.near_range(label + " g(survival product)=(1-F_Y)F_Z", {x}, (1.0 - a) * z, g(sw), glo, ghi, tol);
        }
      }
    }
  });
}

/// Extensions preserve the order of the component distributions; g reverses it.
inline CheckResult order_lemmas(int count = 50, int samples = 1001, std::uint64_t seed = 1) {
  return detail::timed("order_lemmas", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    const double tol = 1e-12;
    for (int k = 0; k < count; ++k) {
      const auto box = instances::random_pbox(rng);
      const auto z = k % 2 ? instances::random_exogenous(rng) : instances::random_lattice_discrete(rng);
      const auto label = box.lower().describe() + " <= " + box.upper().describe() + " with Z=" + z.describe();
      const auto plo = extend_phi(box.lower(), z), phi_hi = extend_phi(box.upper(), z);
      const auto clo = extend_chi(box.lower(), z), chi_hi = extend_chi(box.upper(), z);
      const auto flo = to_rmm(plo), fhi = to_rmm(phi_hi);
      const auto g_from_lo = to_rmm(clo), g_from_hi = to_rmm(chi_hi);
      std::vector<double> us = unit_axis(samples);
      for (const auto& gen : {plo, phi_hi, clo, chi_hi}) {
        for (double s : gen.special_points()) us.push_back(s);
      }
      ++r.instances;
      for (double u : us) {
        r.at_most(label + " phi", {u}, phi_hi(u), plo(u), tol);
        r.at_most(label + " chi", {u}, chi_hi(u), clo(u), tol);
        r.at_most(label + " f", {u}, fhi(u), flo(u), tol);
        r.at_least(label + " g reversed", {u}, g_from_hi(u), g_from_lo(u), tol);
      }
    }
  });
}

/// Bound joint distributions equal the min and max of H over enumerated
/// members (all mixtures with weights {0, 1/2, 1} per component).
inline CheckResult H_bounds_enumerated(Family family, int count = 20, int points = 50, std::uint64_t seed = 1) {
  const std::string name = "H_bounds_enumerated_" + to_string(family);
  return detail::timed(name, [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, name);
    const bool reflected = family == Family::Rmm;
    for (int k = 0; k < count; ++k) {
      const int n = 2 + k % 2;
      const auto model = instances::random_discrete_pbox_model(rng, family, n);
      const auto bf = build_bounds(model);
      const auto label = detail::describe(model);
      std::vector<DiscreteModelOracle> oracles;
      int total = 1;
      for (int i = 0; i < n; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<DistributionFn> comps;
        int c = code;
        for (int i = 0; i < n; ++i, c /= 3) comps.push_back(instances::interior(model.component(i), 0.5 * (c % 3)));
        oracles.emplace_back(model.member(comps));
      }
      ++r.instances;
      for (int t = 0; t < points; ++t) {
        const Point x = instances::random_lattice_point(rng, n);
        double lo = kInfinity, hi = -kInfinity;
        for (const auto& o : oracles) {
          const double h = o.exact_joint(x, reflected);
          lo = std::min(lo, h);
          hi = std::max(hi, h);
        }
        const auto b = detail::H_bounds(bf, x);
        r.near(label + " lower", x, lo, b.lower, 1e-12);
        r.near(label + " upper", x, hi, b.upper, 1e-12);
      }
    }
  });
}

// ===========================================================================
// Theorems

struct TheoremSizes {
  int instances = 20;
  int points = 1000;
  int members = 50;
};

namespace detail {

/// Random p-box instance with precomputed interior members and their generators.
struct Instance {
  ShockModel model;
  BoundFamily bf;
  std::vector<ShockModel> members;
  std::vector<GeneratorVector> member_gens;
  std::string label;
};

inline Instance make_instance(Rng& rng, Family family, int n, int members) {
  auto model = instances::random_pbox_model(rng, family, n);
  auto bf = build_bounds(model);
  auto ms = detail::members(rng, model, members);
  std::vector<GeneratorVector> gens;
  for (const auto& m : ms) gens.push_back(model_generators(m));
  auto label = describe(model);
  return Instance{std::move(model), std::move(bf), std::move(ms), std::move(gens), std::move(label)};
}

}  // namespace detail

/// Copula-level sandwich for Marshall (lower generators below every member,
/// upper above).
inline CheckResult marshall_copula_sandwich(TheoremSizes s = {}, std::uint64_t seed = 1) {
  return detail::timed("marshall_copula_sandwich", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    for (int k = 0; k < s.instances; ++k) {
      const auto inst = detail::make_instance(rng, Family::Marshall, 2 + k % 3, s.members);
      ++r.instances;
      for (int t = 0; t < s.points; ++t) {
        const Point u = instances::random_unit_point(rng, inst.model.n());
        const double c = marshall_n(inst.member_gens[static_cast<std::size_t>(t % s.members)], u);
        const auto b = marshall_bound_copulas(inst.bf, u);
        r.at_least(inst.label + " lower", u, b.lower, c, 1e-10);
        r.at_most(inst.label + " upper", u, b.upper, c, 1e-10);
      }
    }
  });
}

/// H-level sandwich for any family; Marshall additionally checks the
/// composed bounds against the product form.
inline CheckResult H_sandwich(Family family, TheoremSizes s = {}, std::uint64_t seed = 1) {
  const std::string name = "H_sandwich_" + to_string(family);
  return detail::timed(name, [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, name);
    for (int k = 0; k < s.instances; ++k) {
      const auto inst = detail::make_instance(rng, family, 2 + k % 3, s.members);
      const instances::PointSampler sampler(inst.model);
      ++r.instances;
      for (int t = 0; t < s.points; ++t) {
        const Point x = sampler(rng);
        const double h = detail::member_joint(inst.members[static_cast<std::size_t>(t % s.members)], x);
        const auto b = detail::H_bounds(inst.bf, x);
        r.at_least(inst.label + " lower", x, b.lower, h, 1e-10);
        r.at_most(inst.label + " upper", x, b.upper, h, 1e-10);
        if (family == Family::Marshall) {
          const auto d = marshall_H_bounds_direct(inst.bf, x);
          r.near(inst.label + " lower product form", x, d.lower, b.lower, 1e-10);
          r.near(inst.label + " upper product form", x, d.upper, b.upper, 1e-10);
        }
      }
    }
  });
}

/// Bivariate maxmin: C(lower phi, upper chi) <= C(phi, chi) <= C(upper phi, lower chi).
inline CheckResult maxmin_mixed_sandwich(TheoremSizes s = {}, std::uint64_t seed = 1) {
  return detail::timed("maxmin_mixed_sandwich", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    for (int k = 0; k < s.instances; ++k) {
      const auto inst = detail::make_instance(rng, Family::MaxMin, 2, s.members);
      ++r.instances;
      for (int t = 0; t < s.points; ++t) {
        const Point u = instances::random_unit_point(rng, 2);
        const auto& gv = inst.member_gens[static_cast<std::size_t>(t % s.members)];
        const double c = maxmin2(gv[0], gv[1], u[0], u[1]);
        const auto b = maxmin_mixed_bounds(inst.bf, u[0], u[1]);
        r.at_least(inst.label + " lower", u, b.lower, c, 1e-10);
        r.at_most(inst.label + " upper", u, b.upper, c, 1e-10);
      }
    }
  });
}

/// Bivariate rmm: C(lower f, lower g) >= C(f, g) >= C(upper f, upper g) on the
/// copula level, and at the same time lower H^sigma <= H^sigma <= upper H^sigma.
inline CheckResult rmm_bivariate_order_and_Hsigma(TheoremSizes s = {}, std::uint64_t seed = 1) {
  return detail::timed("rmm_bivariate_order_and_Hsigma", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    std::size_t strict = 0;
    for (int k = 0; k < s.instances; ++k) {
      const auto inst = detail::make_instance(rng, Family::Rmm, 2, s.members);
      const instances::PointSampler sampler(inst.model);
      ++r.instances;
      for (int t = 0; t < s.points; ++t) {
        const auto m = static_cast<std::size_t>(t % s.members);
        const Point u = instances::random_unit_point(rng, 2);
        const auto& gv = inst.member_gens[m];
        const double c = rmm2(gv[0], gv[1], u[0], u[1]);
        const auto b = rmm_bound_copulas(inst.bf, u[0], u[1]);
        r.at_least(inst.label + " copula: upper generators below", u, b.lower, c, 1e-10);
        r.at_most(inst.label + " copula: lower generators above", u, b.upper, c, 1e-10);
        if (b.upper > b.lower + 1e-10) ++strict;
        const Point x = sampler(rng);
        const double h = joint_rmm_Hsigma_direct(inst.members[m], x);
        const auto hb = rmm_H_bounds(inst.bf, x);
        r.at_least(inst.label + " H lower", x, hb.lower, h, 1e-10);
        r.at_most(inst.label + " H upper", x, hb.upper, h, 1e-10);
      }
    }
    r.note = std::to_string(strict) + " points with strict copula-level ordering";
  });
}

/// Marshall: phi(G) = F at each bound level, and the stars of lower and upper
/// generators at their lifetimes both equal 1/F_Z.
inline CheckResult marshall_identities(TheoremSizes s = {}, std::uint64_t seed = 1) {
  return detail::timed("marshall_identities", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    for (int k = 0; k < s.instances; ++k) {
      const auto inst = detail::make_instance(rng, Family::Marshall, 2 + k % 3, 1);
      const auto& bf = inst.bf;
      const instances::PointSampler sampler(inst.model);
      ++r.instances;
      for (int t = 0; t < s.points; ++t) {
        const double x = sampler(rng)[0];
        const double fz = bf.exogenous.value(x);
        for (int i = 0; i < bf.n(); ++i) {
          const auto si = static_cast<std::size_t>(i);
          for (int lvl = 0; lvl < 2; ++lvl) {
            const auto& gen = lvl ? bf.upper_gen[i] : bf.lower_gen[i];
            const double G = (lvl ? bf.upper_G : bf.lower_G)[si].value(x);
            const double F = (lvl ? bf.upper_F : bf.lower_F)[si].value(x);
            if (G <= 0.0) continue;
            const std::string tag = inst.label + (lvl ? " upper" : " lower") + " component " + std::to_string(i + 1);
            r.near(tag + " phi(G)=F", {x}, F, gen(G), 1e-12);
            r.near_rel(tag + " phi*(G)=1/F_Z", {x}, 1.0 / fz, star(gen, G).value(), 1e-10);
          }
        }
      }
    }
  });
}

/// Maxmin: dagger of every bound generator at its lifetime equals F_Z, and
/// the defining relations hold at both bound levels.
inline CheckResult maxmin_identities(TheoremSizes s = {}, std::uint64_t seed = 1) {
  return detail::timed("maxmin_identities", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    for (int k = 0; k < s.instances; ++k) {
      const auto inst = detail::make_instance(rng, Family::MaxMin, 2 + k % 3, 1);
      const auto& bf = inst.bf;
      const instances::PointSampler sampler(inst.model);
      ++r.instances;
      for (int t = 0; t < s.points; ++t) {
        const double x = sampler(rng)[0];
        const double fz = bf.exogenous.value(x);
        for (int i = 0; i < bf.n(); ++i) {
          const auto si = static_cast<std::size_t>(i);
          for (int lvl = 0; lvl < 2; ++lvl) {
            const auto& gen = lvl ? bf.upper_gen[i] : bf.lower_gen[i];
            const double G = (lvl ? bf.upper_G : bf.lower_G)[si].value(x);
            const double F = (lvl ? bf.upper_F : bf.lower_F)[si].value(x);
            const std::string tag = inst.label + (lvl ? " upper" : " lower") + " component " + std::to_string(i + 1);
            if (bf.is_max_type(i)) {
              if (G <= 0.0) continue;
              r.near(tag + " phi(G)=F", {x}, F, gen(G), 1e-12);
              r.near(tag + " dagger(G)=F_Z", {x}, fz, dagger(gen, G), 1e-10);
            } else {
              if (G >= 1.0) continue;
              r.near(tag + " chi(G)=F", {x}, F, gen(G), 1e-12);
              // (G - F)/(1 - F) loses digits as F -> 1
              if (1.0 - F >= 1e-6) r.near(tag + " dagger(G)=F_Z", {x}, fz, dagger(gen, G), 1e-10);
            }
          }
        }
      }
    }
  });
}

/// Rmm: f(G) = F - G on both levels (survival form for min-type components
/// with the flipped pairing), and every product of a max-type star with a
/// min-type star equals 1.
inline CheckResult rmm_identities(TheoremSizes s = {}, std::uint64_t seed = 1) {
  return detail::timed("rmm_identities", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    for (int k = 0; k < s.instances; ++k) {
      const auto inst = detail::make_instance(rng, Family::Rmm, 2 + k % 3, 1);
      const auto& bf = inst.bf;
      const instances::PointSampler sampler(inst.model);
      ++r.instances;
      for (int t = 0; t < s.points; ++t) {
        const double x = sampler(rng)[0];
        const double fz = bf.exogenous.value(x);
        // star value and its rounding range per component and level; nullopt where undefined
        std::vector<std::array<std::optional<std::array<double, 3>>, 2>> stars(static_cast<std::size_t>(bf.n()));
        for (int i = 0; i < bf.n(); ++i) {
          const auto si = static_cast<std::size_t>(i);
          for (int lvl = 0; lvl < 2; ++lvl) {
            const auto& gen = lvl ? bf.upper_gen[i] : bf.lower_gen[i];
            const std::string tag = inst.label + (lvl ? " upper" : " lower") + " component " + std::to_string(i + 1);
            double arg, expect;
            if (bf.is_max_type(i)) {
              arg = (lvl ? bf.upper_G : bf.lower_G)[si].value(x);
              expect = (lvl ? bf.upper_F : bf.lower_F)[si].value(x) - arg;
            } else {
              // lower g pairs with the upper distribution and vice versa
              arg = 1.0 - (lvl ? bf.lower_G : bf.upper_G)[si].value(x);
              expect = 1.0 - (lvl ? bf.lower_F : bf.upper_F)[si].value(x) - arg;
            }
            if (arg <= 0.0) continue;
            const auto [glo, ghi] = detail::rounding_range(gen, arg);
            r.near_range(tag + " f(G)=F-G", {x}, expect, gen(arg), glo, ghi, 1e-12);
            if (!star(gen, arg).is_finite()) continue;
            const auto sr = detail::rounding_range(
                [&gen](double a) { const auto v = star(gen, a); return v.is_finite() ? v.value() : kInfinity; }, arg);
            stars[si][static_cast<std::size_t>(lvl)] = std::array<double, 3>{star(gen, arg).value(), sr.first, sr.second};
          }
        }
        if (!(fz >= 1e-6 && fz <= 1.0 - 1e-6)) continue;
        for (int i = 0; i < bf.p; ++i) {
          for (int j = bf.p; j < bf.n(); ++j) {
            for (int li = 0; li < 2; ++li) {
              for (int lj = 0; lj < 2; ++lj) {
                const auto& a = stars[static_cast<std::size_t>(i)][static_cast<std::size_t>(li)];
                const auto& b = stars[static_cast<std::size_t>(j)][static_cast<std::size_t>(lj)];
                if (!a || !b) continue;
                r.near_range(inst.label + " star product (" + std::to_string(i + 1) + (li ? " upper, " : " lower, ") +
                           std::to_string(j + 1) + (lj ? " upper)" : " lower)"),
                       {x}, 1.0, (*a)[0] * (*b)[0], (*a)[1] * (*b)[1], (*a)[2] * (*b)[2], 1e-10);
              }
            }
          }
        }
      }
    }
  });
}

/// Reduced-set inf and sup against the full 2^n vertex scan, as two checks.
inline std::pair<CheckResult, CheckResult> envelope_reduction(int n, int count = 20, int points = 1000,
                                                              std::uint64_t seed = 1) {
  const std::string suffix = "_n" + std::to_string(n);
  CheckResult inf, sup;
  inf.check = "envelope_reduction_inf" + suffix;
  sup.check = "envelope_reduction_sup" + suffix;
  const auto t0 = std::chrono::steady_clock::now();
  auto rng = detail::check_rng(seed, "envelope_reduction" + suffix);
  for (int k = 0; k < count; ++k) {
    const BoundFamily bf = k % 4 == 3 ? build_bounds(instances::random_pbox_model(rng, Family::Rmm, n))
                                      : instances::random_rmm_bounds(rng, n);
    const auto label = detail::describe(bf);
    ++inf.instances;
    ++sup.instances;
    for (int t = 0; t < points; ++t) {
      const Point u = instances::random_unit_point(rng, n);
      const auto e = rmm_envelope(bf, u);
      inf.near(label, u, e.vertices.min, e.inf, 1e-12);
      sup.near(label, u, e.vertices.max, e.sup, 1e-12);
    }
  }
  inf.seconds = sup.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {inf, sup};
}

/// Bivariate envelope: inf = C(upper f, upper g), sup = C(lower f, lower g).
inline CheckResult envelope_bivariate(int count = 20, int points = 1000, std::uint64_t seed = 1) {
  return detail::timed("envelope_bivariate", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    for (int k = 0; k < count; ++k) {
      const auto bf = instances::random_rmm_bounds(rng, 2);
      const auto label = detail::describe(bf);
      ++r.instances;
      for (int t = 0; t < points; ++t) {
        const Point u = instances::random_unit_point(rng, 2);
        const auto e = rmm_envelope_reduced(bf, u);
        const auto b = rmm_bound_copulas(bf, u[0], u[1]);
        r.near(label + " inf", u, b.lower, e.lower, 1e-12);
        r.near(label + " sup", u, b.upper, e.upper, 1e-12);
      }
    }
  });
}

/// Informational: maxmin member copulas outside the range of the 2^n vertex copulas.
inline CheckResult maxmin_vertex_diagnostic(int count = 10, int points = 200, std::uint64_t seed = 1) {
  return detail::timed("maxmin_vertex_diagnostic", [&](CheckResult& r) {
    r.informational = true;
    auto rng = detail::check_rng(seed, r.check);
    std::size_t below = 0, above = 0;
    for (int k = 0; k < count; ++k) {
      const auto inst = detail::make_instance(rng, Family::MaxMin, 3, 10);
      ++r.instances;
      for (int t = 0; t < points; ++t) {
        const Point u = instances::random_unit_point(rng, 3);
        const auto scan = vertex_scan(inst.bf, u);
        const double c = maxmin_n(inst.member_gens[static_cast<std::size_t>(t % 10)], u);
        if (c < scan.min - 1e-12) ++below;
        if (c > scan.max + 1e-12) ++above;
        r.at_least(inst.label + " below vertex min", u, scan.min, c, 1e-12);
        r.at_most(inst.label + " above vertex max", u, scan.max, c, 1e-12);
      }
    }
    r.note = std::to_string(below) + " member values below and " + std::to_string(above) +
             " above the vertex range";
  });
}

inline CheckResult worked_example_check() {
  return detail::timed("worked_example", [&](CheckResult& r) {
    const auto rep = example::run(example::Params{});
    for (const auto& c : rep.checks) {
      ++r.evaluations;
      if (!c.pass) r.fail("exponential/dirac example: " + c.name, {}, 0.0, c.max_error);
    }
    r.instances = 1;
  });
}

// ===========================================================================
// Monte Carlo

/// The 20 evaluation points of the Monte Carlo check.
inline std::vector<Point> montecarlo_points() {
  std::vector<Point> pts;
  for (double x : {1.0, 1.5, 2.0, 3.0}) {
    for (double y : {0.0, 0.25, 0.5, 0.95}) pts.push_back({x, y});
  }
  for (const auto& p : std::vector<Point>{{0.5, 0.25}, {1.5, 1.5}, {2.0, 1.0}, {0.9, 0.1}}) pts.push_back(p);
  return pts;
}

inline CheckResult montecarlo_consistency(std::uint64_t N = 1000000, std::uint64_t seed = 1) {
  return detail::timed("montecarlo_consistency", [&](CheckResult& r) {
    const auto model = example::precise_model(1.0, 1.0);
    const auto pts = montecarlo_points();
    const auto est = monte_carlo_joint(model, pts, N, seed, true);
    r.instances = 1;
    double worst = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double exact = joint_rmm_Hsigma(model, pts[k]);
      r.near(detail::describe(model) + " N=" + std::to_string(N), pts[k], exact, est[k].estimate, 4.0 * est[k].stderr_);
      if (est[k].stderr_ > 0) worst = std::max(worst, std::abs(est[k].estimate - exact) / est[k].stderr_);
    }
    r.note = "largest deviation " + format_double(worst) + " standard errors";
  });
}

/// Same seed gives bit-identical estimates regardless of the worker count.
inline CheckResult montecarlo_reproducible(std::uint64_t N = 1000000, std::uint64_t seed = 1) {
  return detail::timed("montecarlo_reproducible", [&](CheckResult& r) {
    const auto model = example::precise_model(1.0, 1.0);
    const auto pts = montecarlo_points();
    const auto a = monte_carlo_joint(model, pts, N, seed, true);
    const auto b = monte_carlo_joint(model, pts, N, seed, true, 1);
    const auto c = monte_carlo_joint(model, pts, N, seed, true, 3);
    r.instances = 1;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      r.near("rerun, default workers vs 1", pts[k], a[k].estimate, b[k].estimate, 0.0);
      r.near("rerun, default workers vs 3", pts[k], a[k].estimate, c[k].estimate, 0.0);
    }
  });
}

/// Z below every support: H factorizes into the marginals.
inline CheckResult montecarlo_independence(std::uint64_t N = 200000, std::uint64_t seed = 1) {
  return detail::timed("montecarlo_independence", [&](CheckResult& r) {
    const auto model = ShockModel::precise(Family::Marshall, 2,
                                           {DistributionFn::exponential(1.0), DistributionFn::exponential(2.0)},
                                           DistributionFn::dirac(-kInfinity));
    const std::vector<Point> pts{{0.5, 0.5}, {1.0, 0.2}, {0.3, 1.2}, {2.0, 2.0}, {0.1, 0.1}};
    const auto est = monte_carlo_joint(model, pts, N, seed, false);
    const auto comps = model.components();
    r.instances = 1;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double prod = comps[0].value(pts[k][0]) * comps[1].value(pts[k][1]);
      r.near(detail::describe(model), pts[k], prod, est[k].estimate, 4.0 * est[k].stderr_);
      r.near(detail::describe(model) + " formula", pts[k], prod, joint_marshall_H(model, pts[k]), 1e-12);
    }
  });
}

/// Simulation of random discrete models against the enumeration oracle.
inline CheckResult montecarlo_discrete(std::uint64_t N = 200000, std::uint64_t seed = 1) {
  return detail::timed("montecarlo_discrete", [&](CheckResult& r) {
    auto rng = detail::check_rng(seed, r.check);
    const Family families[] = {Family::Marshall, Family::MaxMin, Family::Rmm};
    for (Family fam : families) {
      const auto model = instances::random_discrete_model(rng, fam, 3);
      const DiscreteModelOracle oracle(model);
      std::vector<Point> pts;
      for (int t = 0; t < 5; ++t) pts.push_back(instances::random_lattice_point(rng, 3));
      const bool reflected = fam == Family::Rmm;
      const auto est = monte_carlo_joint(model, pts, N, seed, reflected);
      ++r.instances;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        r.near(detail::describe(model), pts[k], oracle.exact_joint(pts[k], reflected), est[k].estimate,
               4.0 * est[k].stderr_);
      }
    }
  });
}

// ===========================================================================
// Suites

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<json> config;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "oracles", "theorems", "montecarlo", "all"};
  return names;
}

inline SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt = {}) {
  SuiteReport rep{suite, opt.seed, {}};
  const auto seed = opt.seed;
  auto add = [&](CheckResult c) { rep.checks.push_back(std::move(c)); };
  const bool all = suite == "all";
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  const Family families[] = {Family::Marshall, Family::MaxMin, Family::Rmm};

  if (all || suite == "axioms") {
    if (opt.config) {
      for (auto& c : user_config_checks(*opt.config)) add(std::move(c));
    }
    for (Family f : families) {
      for (int n : {2, 3}) add(copula_axioms(f, n, 50, 21, seed));
    }
    add(generator_conditions(60, 1001, seed));
    add(validation_rejects_invalid());
    add(family_consistency(10, 101, seed));
    add(distfn_invariants(200, 1000, seed));
    add(envelope_quasicopula(2, 10, seed));
    add(envelope_quasicopula(3, 5, seed));
    add(extension_diagnostics(30, 1001, seed));
  }
  if (all || suite == "oracles") {
    add(oracle_total_probability(100, seed));
    for (Family f : families) add(oracle_equivalence(f, 100, 50, seed));
    add(defining_relations(100, 1000, seed));
    add(order_lemmas(50, 1001, seed));
    for (Family f : families) add(H_bounds_enumerated(f, 20, 50, seed));
  }
  if (all || suite == "theorems") {
    const TheoremSizes s{};
    add(marshall_copula_sandwich(s, seed));
    for (Family f : families) add(H_sandwich(f, s, seed));
    add(maxmin_mixed_sandwich(s, seed));
    add(rmm_bivariate_order_and_Hsigma(s, seed));
    add(marshall_identities(s, seed));
    add(maxmin_identities(s, seed));
    add(rmm_identities(s, seed));
    add(envelope_bivariate(20, 1000, seed));
    for (int n : {3, 4, 5}) {
      auto [inf, sup] = envelope_reduction(n, 20, 1000, seed);
      add(std::move(inf));
      add(std::move(sup));
    }
    add(worked_example_check());
    add(maxmin_vertex_diagnostic(10, 200, seed));
    add(envelope_n_increasing(10, seed));
  }
  if (all || suite == "montecarlo") {
    add(montecarlo_consistency(1000000, seed));
    add(montecarlo_reproducible(1000000, seed));
    add(montecarlo_independence(200000, seed));
    add(montecarlo_discrete(200000, seed));
  }
  return rep;
}

}  // namespace shockcop::suites
