#pragma once

// Precise shock-model copulas (Marshall, maxmin, reflected maxmin) and the
// joint distribution formulas they reproduce.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shockcop/distfn.hpp"
#include "shockcop/genfn.hpp"
#include "shockcop/model.hpp"

namespace shockcop {

using Point = std::vector<double>;

/// Generators of one n-variate copula, max-type coordinates first.
class GeneratorVector {
 public:
  static GeneratorVector marshall(std::vector<Generator> phis) {
    const int n = static_cast<int>(phis.size());
    return GeneratorVector(Family::Marshall, n, std::move(phis));
  }
  static GeneratorVector maxmin(std::vector<Generator> gens, int p) {
    return GeneratorVector(Family::MaxMin, p, std::move(gens));
  }
  static GeneratorVector rmm(std::vector<Generator> gens, int p) {
    return GeneratorVector(Family::Rmm, p, std::move(gens));
  }

  Family family() const { return family_; }
  int n() const { return static_cast<int>(gens_.size()); }
  int p() const { return p_; }
  const Generator& operator[](int i) const { return gens_[static_cast<std::size_t>(i)]; }
  const std::vector<Generator>& generators() const { return gens_; }

 private:
  GeneratorVector(Family family, int p, std::vector<Generator> gens) : family_(family), p_(p), gens_(std::move(gens)) {
    const int n = this->n();
    if (n < 2) throw std::invalid_argument("a generator vector needs at least two generators");
    if (n > ShockModel::kMaxDimension) throw std::invalid_argument("at most 12 generators are supported");
    for (int i = 0; i < n; ++i) {
      const GeneratorKind k = gens_[static_cast<std::size_t>(i)].kind();
      const bool head = i < p_;
      bool ok = false;
      switch (family_) {
        case Family::Marshall: ok = k == GeneratorKind::Phi || k == GeneratorKind::Psi; break;
        case Family::MaxMin:
          ok = head ? (k == GeneratorKind::Phi || k == GeneratorKind::Psi) : k == GeneratorKind::Chi;
          break;
        case Family::Rmm: ok = head ? k == GeneratorKind::RmmF : k == GeneratorKind::RmmG; break;
      }
      if (!ok) {
        throw std::invalid_argument("generator " + std::to_string(i + 1) + " has kind " + to_string(k) +
                                    ", which does not fit a " + to_string(family_) + " vector with p = " +
                                    std::to_string(p_));
      }
    }
    if (family_ != Family::Marshall && (p_ < 1 || p_ > n - 1)) {
      throw std::invalid_argument("maxmin and rmm generator vectors need 1 <= p <= n - 1");
    }
  }

  Family family_;
  int p_;
  std::vector<Generator> gens_;
};

namespace detail {
inline void check_dim(const GeneratorVector& gv, const Point& u) {
  if (static_cast<int>(u.size()) != gv.n()) {
    throw std::invalid_argument("point has " + std::to_string(u.size()) + " coordinates, expected " +
                                std::to_string(gv.n()));
  }
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Bivariate forms

/// uv * min{phi(u)/u, psi(v)/v}, 0 when uv = 0.
inline double marshall2(const Generator& phi, const Generator& psi, double u, double v) {
  if (u * v <= 0.0) return 0.0;
  return u * v * std::min(phi(u) / u, psi(v) / v);
}

/// phi(u) psi(v) min{u/phi(u), v/psi(v)}, 0 when phi(u) psi(v) = 0.
inline double marshall2_alt(const Generator& phi, const Generator& psi, double u, double v) {
  const double a = phi(u);
  const double b = psi(v);
  if (a * b <= 0.0) return 0.0;
  return a * b * std::min(u / a, v / b);
}

/// uv + min{u(1 - v), (phi(u) - u)(v - chi(v))}.
inline double maxmin2(const Generator& phi, const Generator& chi, double u, double v) {
  return u * v + std::min(u * (1.0 - v), (phi(u) - u) * (v - chi(v)));
}

/// max{0, xy - f(x) g(y)}.
inline double rmm2(const Generator& f, const Generator& g, double x, double y) {
  return std::max(0.0, x * y - f(x) * g(y));
}

// ---------------------------------------------------------------------------
// n-variate forms

inline double marshall_n(const GeneratorVector& gv, const Point& u) {
  if (gv.family() != Family::Marshall) throw std::invalid_argument("marshall_n needs a Marshall generator vector");
  detail::check_dim(gv, u);
  double prod = 1.0;
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < gv.n(); ++i) {
    const double a = gv[i](u[static_cast<std::size_t>(i)]);
    if (a <= 0.0) return 0.0;
    prod *= a;
    m = std::min(m, u[static_cast<std::size_t>(i)] / a);
  }
  return prod * m;
}

inline double maxmin_n(const GeneratorVector& gv, const Point& u) {
  if (gv.family() != Family::MaxMin) throw std::invalid_argument("maxmin_n needs a maxmin generator vector");
  detail::check_dim(gv, u);
  const int n = gv.n();
  const int p = gv.p();
  double prod_t = 1.0;
  double min_t = std::numeric_limits<double>::infinity();
  for (int i = 0; i < p; ++i) {
    const double ui = u[static_cast<std::size_t>(i)];
    if (ui <= 0.0) return 0.0;
    const double a = gv[i](ui);
    if (a <= 0.0) return 0.0;
    prod_t *= a;
    min_t = std::min(min_t, ui / a);
  }
  const int s = n - p;
  std::vector<double> chi(static_cast<std::size_t>(s)), dag(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    const double uj = u[static_cast<std::size_t>(p + j)];
    const double c = gv[p + j](uj);
    chi[static_cast<std::size_t>(j)] = c;
    dag[static_cast<std::size_t>(j)] = uj >= 1.0 ? 1.0 : (uj - c) / (1.0 - c);
  }
  double sum = 0.0;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {  // bit j set: j in K
    double lo = min_t;
    double hi = 0.0;  // max over the empty set
    double weight = 1.0;
    for (int j = 0; j < s; ++j) {
      if (mask & (1u << j)) {
        lo = std::min(lo, dag[static_cast<std::size_t>(j)]);
      } else {
        hi = std::max(hi, dag[static_cast<std::size_t>(j)]);
        weight *= chi[static_cast<std::size_t>(j)];
      }
    }
    if (lo > hi && weight > 0.0) sum += weight * (lo - hi);
  }
  return prod_t * sum;
}

inline double rmm_n(const GeneratorVector& gv, const Point& u) {
  if (gv.family() != Family::Rmm) throw std::invalid_argument("rmm_n needs an rmm generator vector");
  detail::check_dim(gv, u);
  const int n = gv.n();
  const int p = gv.p();
  std::vector<double> f(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    f[static_cast<std::size_t>(l)] = gv[l](u[static_cast<std::size_t>(l)]);
    s[static_cast<std::size_t>(l)] = u[static_cast<std::size_t>(l)] + f[static_cast<std::size_t>(l)];
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < p; ++i) {
    for (int j = p; j < n; ++j) {
      double term = u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)] -
                    f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
      for (int l = 0; l < n; ++l) {
        if (l != i && l != j) term *= s[static_cast<std::size_t>(l)];
      }
      best = std::min(best, term);
    }
  }
  return std::max(0.0, best);
}

/// Evaluates the copula matching the vector's family.
inline double copula(const GeneratorVector& gv, const Point& u) {
  switch (gv.family()) {
    case Family::Marshall: return marshall_n(gv, u);
    case Family::MaxMin: return maxmin_n(gv, u);
    case Family::Rmm: return rmm_n(gv, u);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Precise models: generators, lifetimes and joint distributions

/// Extension generators of a precise model, built once.
inline GeneratorVector model_generators(const ShockModel& model) {
  const auto comps = model.components();
  const auto& fz = model.exogenous();
  std::vector<Generator> gens;
  for (int i = 0; i < model.n(); ++i) {
    const auto& f = comps[static_cast<std::size_t>(i)];
    Generator g = model.is_max_type(i) ? extend_phi(f, fz) : extend_chi(f, fz);
    gens.push_back(model.family() == Family::Rmm ? to_rmm(g) : g);
  }
  switch (model.family()) {
    case Family::Marshall: return GeneratorVector::marshall(std::move(gens));
    case Family::MaxMin: return GeneratorVector::maxmin(std::move(gens), model.p());
    case Family::Rmm: return GeneratorVector::rmm(std::move(gens), model.p());
  }
  throw std::logic_error("unreachable");
}

/// Lifetime distributions G_1..G_n of a precise model.
inline std::vector<DistributionFn> model_lifetimes(const ShockModel& model) {
  const auto comps = model.components();
  std::vector<DistributionFn> out;
  for (int i = 0; i < model.n(); ++i) out.push_back(model.lifetime(i, comps[static_cast<std::size_t>(i)]));
  return out;
}

namespace detail {
inline void check_point(const ShockModel& m, const Point& x) {
  if (static_cast<int>(x.size()) != m.n()) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(m.n()));
  }
}
}  // namespace detail

/// F_1(x_1)...F_n(x_n) F_Z(min x).
inline double joint_marshall_H(const ShockModel& model, const Point& x) {
  detail::check_point(model, x);
  const auto comps = model.components();
  double prod = 1.0;
  double mn = kInfinity;
  for (int i = 0; i < model.n(); ++i) {
    prod *= comps[static_cast<std::size_t>(i)].value(x[static_cast<std::size_t>(i)]);
    mn = std::min(mn, x[static_cast<std::size_t>(i)]);
  }
  return prod * model.exogenous().value(mn);
}

/// P(U_i <= x_i for all i) for a maxmin model, by the 2^|S| subset sum.
inline double joint_maxmin_H(const ShockModel& model, const Point& x) {
  detail::check_point(model, x);
  const auto comps = model.components();
  const auto& fz = model.exogenous();
  const int n = model.n();
  const int p = model.p();
  std::vector<double> fv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) fv[static_cast<std::size_t>(i)] = comps[static_cast<std::size_t>(i)].value(x[static_cast<std::size_t>(i)]);
  double prod_t = 1.0;
  double min_t = kInfinity;
  for (int i = 0; i < p; ++i) {
    prod_t *= fv[static_cast<std::size_t>(i)];
    min_t = std::min(min_t, x[static_cast<std::size_t>(i)]);
  }
  const int s = n - p;
  double sum = 0.0;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    double lo = min_t;
    double hi = -kInfinity;
    double weight = prod_t;
    for (int j = 0; j < s; ++j) {
      const double xj = x[static_cast<std::size_t>(p + j)];
      if (mask & (1u << j)) {
        lo = std::min(lo, xj);
      } else {
        hi = std::max(hi, xj);
        weight *= fv[static_cast<std::size_t>(p + j)];
      }
    }
    if (weight == 0.0) continue;
    sum += weight * std::max(0.0, fz.value(lo) - fz.value(hi));
  }
  return sum;
}

/// P(U_i <= x_i for i in T, U_j > x_j for j in S) by the product formula.
inline double joint_rmm_Hsigma_direct(const ShockModel& model, const Point& x) {
  detail::check_point(model, x);
  const auto comps = model.components();
  double prod = 1.0;
  double min_t = kInfinity;
  double max_s = -kInfinity;
  for (int i = 0; i < model.n(); ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    const double fi = comps[static_cast<std::size_t>(i)].value(xi);
    if (model.is_max_type(i)) {
      prod *= fi;
      min_t = std::min(min_t, xi);
    } else {
      prod *= 1.0 - fi;
      max_s = std::max(max_s, xi);
    }
  }
  if (prod == 0.0) return 0.0;
  return prod * std::max(0.0, model.exogenous().value(min_t) - model.exogenous().value(max_s));
}

/// A precise model with its extension generators and lifetimes cached, for
/// repeated evaluation of copula-composed joint distributions.
class ComposedModel {
 public:
  explicit ComposedModel(const ShockModel& model)
      : model_(model), gens_(model_generators(model)), lifetimes_(model_lifetimes(model)) {}

  const ShockModel& model() const { return model_; }
  const GeneratorVector& generators() const { return gens_; }
  const std::vector<DistributionFn>& lifetimes() const { return lifetimes_; }

  /// Copula arguments at x: G_i(x_i), with min-type coordinates reflected to
  /// 1 - G_j(x_j) for the rmm family.
  Point copula_arguments(const Point& x) const {
    detail::check_point(model_, x);
    Point u(x.size());
    for (int i = 0; i < model_.n(); ++i) {
      const double g = lifetimes_[static_cast<std::size_t>(i)].value(x[static_cast<std::size_t>(i)]);
      const bool reflect = model_.family() == Family::Rmm && !model_.is_max_type(i);
      u[static_cast<std::size_t>(i)] = reflect ? 1.0 - g : g;
    }
    return u;
  }

  /// C(G_1(x_1), ...): H for Marshall and maxmin, H^sigma for rmm.
  double joint(const Point& x) const { return copula(gens_, copula_arguments(x)); }

 private:
  ShockModel model_;
  GeneratorVector gens_;
  std::vector<DistributionFn> lifetimes_;
};

/// H^sigma as the rmm copula composed with (G_T, 1 - G_S).
inline double joint_rmm_Hsigma(const ShockModel& model, const Point& x) {
  if (model.family() != Family::Rmm) throw std::invalid_argument("joint_rmm_Hsigma needs an rmm model");
  return ComposedModel(model).joint(x);
}

}  // namespace shockcop
