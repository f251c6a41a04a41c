#pragma once

// Imprecise shock-model families built from p-box inputs.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shockcop/copulas.hpp"
#include "shockcop/distfn.hpp"
#include "shockcop/genfn.hpp"
#include "shockcop/model.hpp"

namespace shockcop {

struct Interval {
  double lower;
  double upper;
};

/// Bound lifetimes and bound generators of an imprecise shock model.
struct BoundFamily {
  Family family;
  int p;
  DistributionFn exogenous;
  std::vector<DistributionFn> lower_F, upper_F;  // component p-box bounds
  std::vector<DistributionFn> lower_G, upper_G;  // G from lower_F and from upper_F
  GeneratorVector lower_gen;
  GeneratorVector upper_gen;

  int n() const { return lower_gen.n(); }
  bool is_max_type(int i) const { return i < p; }
};

namespace detail {
inline GeneratorVector make_vector(Family family, int p, std::vector<Generator> gens) {
  switch (family) {
    case Family::Marshall: return GeneratorVector::marshall(std::move(gens));
    case Family::MaxMin: return GeneratorVector::maxmin(std::move(gens), p);
    case Family::Rmm: return GeneratorVector::rmm(std::move(gens), p);
  }
  throw std::logic_error("unreachable");
}
}  // namespace detail

/// Lifetimes from the bound distributions and the canonical extension of each
/// bound. For rmm min-type components the order flips: the lower g comes from
/// the upper distribution and the upper g from the lower one.
inline BoundFamily build_bounds(const ShockModel& model) {
  const auto& fz = model.exogenous();
  std::vector<DistributionFn> lf, uf, lg, ug;
  std::vector<Generator> lgen, ugen;
  for (int i = 0; i < model.n(); ++i) {
    const auto& box = model.component(i);
    lf.push_back(box.lower());
    uf.push_back(box.upper());
    lg.push_back(model.lifetime(i, box.lower()));
    ug.push_back(model.lifetime(i, box.upper()));
    if (model.is_max_type(i)) {
      Generator lo = extend_phi(box.lower(), fz);
      Generator hi = box.is_degenerate() ? lo : extend_phi(box.upper(), fz);
      if (model.family() == Family::Rmm) {
        lo = to_rmm(lo);
        hi = box.is_degenerate() ? lo : to_rmm(hi);
      }
      lgen.push_back(lo);
      ugen.push_back(hi);
    } else {
      Generator from_lower = extend_chi(box.lower(), fz);
      Generator from_upper = box.is_degenerate() ? from_lower : extend_chi(box.upper(), fz);
      if (model.family() == Family::Rmm) {
        Generator g_lo = to_rmm(from_upper);
        Generator g_hi = box.is_degenerate() ? g_lo : to_rmm(from_lower);
        lgen.push_back(g_lo);
        ugen.push_back(g_hi);
      } else {
        lgen.push_back(from_lower);
        ugen.push_back(from_upper);
      }
    }
  }
  return BoundFamily{model.family(),
                     model.p(),
                     fz,
                     std::move(lf),
                     std::move(uf),
                     std::move(lg),
                     std::move(ug),
                     detail::make_vector(model.family(), model.p(), std::move(lgen)),
                     detail::make_vector(model.family(), model.p(), std::move(ugen))};
}

/// Bound family given by generator bounds alone; the distribution fields stay
/// empty, so only the copula-level functions apply.
inline BoundFamily bounds_from_generators(GeneratorVector lower, GeneratorVector upper) {
  if (lower.family() != upper.family() || lower.p() != upper.p() || lower.n() != upper.n()) {
    throw std::invalid_argument("lower and upper generator vectors differ in shape");
  }
  const Family family = lower.family();
  const int p = lower.p();
  return BoundFamily{family, p, DistributionFn::dirac(-kInfinity), {}, {}, {}, {}, std::move(lower), std::move(upper)};
}

namespace detail {
inline void require_family(const BoundFamily& bf, Family f, const char* what) {
  if (bf.family != f) throw std::invalid_argument(std::string(what) + " needs a " + to_string(f) + " bound family");
}
inline void require_dim(const BoundFamily& bf, const Point& x) {
  if (static_cast<int>(x.size()) != bf.n()) throw std::invalid_argument("point dimension does not match the model");
}
inline Point evaluate_all(const std::vector<DistributionFn>& fs, const Point& x) {
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = fs[i].value(x[i]);
  return out;
}
}  // namespace detail

/// (C_lower-phi(u), C_upper-phi(u)).
inline Interval marshall_bound_copulas(const BoundFamily& bf, const Point& u) {
  detail::require_family(bf, Family::Marshall, "marshall_bound_copulas");
  return {marshall_n(bf.lower_gen, u), marshall_n(bf.upper_gen, u)};
}

/// (C at lower G with lower generators, C at upper G with upper generators).
inline Interval marshall_H_bounds(const BoundFamily& bf, const Point& x) {
  detail::require_family(bf, Family::Marshall, "marshall_H_bounds");
  detail::require_dim(bf, x);
  return {marshall_n(bf.lower_gen, detail::evaluate_all(bf.lower_G, x)),
          marshall_n(bf.upper_gen, detail::evaluate_all(bf.upper_G, x))};
}

/// Product form of the Marshall H bounds: prod F(x_i) F_Z(min x) at each bound.
inline Interval marshall_H_bounds_direct(const BoundFamily& bf, const Point& x) {
  detail::require_family(bf, Family::Marshall, "marshall_H_bounds_direct");
  detail::require_dim(bf, x);
  double lo = 1.0, hi = 1.0, mn = kInfinity;
  for (int i = 0; i < bf.n(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    lo *= bf.lower_F[k].value(x[k]);
    hi *= bf.upper_F[k].value(x[k]);
    mn = std::min(mn, x[k]);
  }
  const double z = bf.exogenous.value(mn);
  return {lo * z, hi * z};
}

/// Maxmin copula with all-lower and all-upper generators. Not ordered in general.
inline Interval maxmin_bound_copulas(const BoundFamily& bf, const Point& u) {
  detail::require_family(bf, Family::MaxMin, "maxmin_bound_copulas");
  return {maxmin_n(bf.lower_gen, u), maxmin_n(bf.upper_gen, u)};
}

/// Bivariate mixed bounds (C_{lower phi, upper chi}(u, v), C_{upper phi, lower chi}(u, v)).
inline Interval maxmin_mixed_bounds(const BoundFamily& bf, double u, double v) {
  detail::require_family(bf, Family::MaxMin, "maxmin_mixed_bounds");
  if (bf.n() != 2) throw std::invalid_argument("mixed maxmin bounds are bivariate");
  return {maxmin2(bf.lower_gen[0], bf.upper_gen[1], u, v), maxmin2(bf.upper_gen[0], bf.lower_gen[1], u, v)};
}

inline Interval maxmin_H_bounds(const BoundFamily& bf, const Point& x) {
  detail::require_family(bf, Family::MaxMin, "maxmin_H_bounds");
  detail::require_dim(bf, x);
  return {maxmin_n(bf.lower_gen, detail::evaluate_all(bf.lower_G, x)),
          maxmin_n(bf.upper_gen, detail::evaluate_all(bf.upper_G, x))};
}

/// Arguments (G_T(x), 1 - G_S(x)) of an rmm copula for the given lifetimes.
inline Point rmm_arguments(const BoundFamily& bf, const std::vector<DistributionFn>& max_side,
                           const std::vector<DistributionFn>& min_side, const Point& x) {
  Point u(x.size());
  for (int i = 0; i < bf.n(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    u[k] = bf.is_max_type(i) ? max_side[k].value(x[k]) : 1.0 - min_side[k].value(x[k]);
  }
  return u;
}

/// Lower: lower f at (lower G_T, 1 - upper G_S). Upper: upper f at (upper G_T, 1 - lower G_S).
inline Interval rmm_H_bounds(const BoundFamily& bf, const Point& x) {
  detail::require_family(bf, Family::Rmm, "rmm_H_bounds");
  detail::require_dim(bf, x);
  return {rmm_n(bf.lower_gen, rmm_arguments(bf, bf.lower_G, bf.upper_G, x)),
          rmm_n(bf.upper_gen, rmm_arguments(bf, bf.upper_G, bf.lower_G, x))};
}

/// Bivariate rmm copula bounds (C_{upper f, upper g}, C_{lower f, lower g}).
inline Interval rmm_bound_copulas(const BoundFamily& bf, double x, double y) {
  detail::require_family(bf, Family::Rmm, "rmm_bound_copulas");
  if (bf.n() != 2) throw std::invalid_argument("rmm copula bounds are bivariate; use rmm_envelope");
  return {rmm2(bf.upper_gen[0], bf.upper_gen[1], x, y), rmm2(bf.lower_gen[0], bf.lower_gen[1], x, y)};
}

/// Generator vector taking the upper bound where bit i of `upper_mask` is set.
inline GeneratorVector vertex_vector(const BoundFamily& bf, unsigned upper_mask) {
  std::vector<Generator> gens;
  for (int i = 0; i < bf.n(); ++i) {
    gens.push_back((upper_mask >> i) & 1u ? bf.upper_gen[i] : bf.lower_gen[i]);
  }
  return detail::make_vector(bf.family, bf.p, std::move(gens));
}

struct VertexScan {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  unsigned argmin = 0;  // bit i set: upper generator in coordinate i
  unsigned argmax = 0;
};

/// Copula value at every one of the 2^n lower/upper generator tuples.
inline VertexScan vertex_scan(const BoundFamily& bf, const Point& u) {
  detail::require_dim(bf, u);
  VertexScan out;
  for (unsigned mask = 0; mask < (1u << bf.n()); ++mask) {
    const double c = copula(vertex_vector(bf, mask), u);
    if (c < out.min) {
      out.min = c;
      out.argmin = mask;
    }
    if (c > out.max) {
      out.max = c;
      out.argmax = mask;
    }
  }
  return out;
}

struct Envelope {
  double inf;  // min over tuples with upper f at one (i, j) pair, lower elsewhere
  double sup;  // max over tuples with lower f at one (i, j) pair, upper elsewhere
  VertexScan vertices;
  bool inf_matches_vertices;
  bool sup_matches_vertices;
};

/// (inf, sup) over the reduced vertex sets: upper f at one (i, j) pair with
/// lower f elsewhere for the inf, the dual choice for the sup.
inline Interval rmm_envelope_reduced(const BoundFamily& bf, const Point& u) {
  detail::require_family(bf, Family::Rmm, "rmm_envelope");
  detail::require_dim(bf, u);
  const int n = bf.n();
  const unsigned all = (1u << n) - 1u;
  Interval out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < bf.p; ++i) {
    for (int j = bf.p; j < n; ++j) {
      const unsigned pair = (1u << i) | (1u << j);
      out.lower = std::min(out.lower, rmm_n(vertex_vector(bf, pair), u));
      out.upper = std::max(out.upper, rmm_n(vertex_vector(bf, all & ~pair), u));
    }
  }
  return out;
}

/// Reduced-set envelope at u alongside the full 2^n vertex scan it is
/// supposed to agree with.
inline Envelope rmm_envelope(const BoundFamily& bf, const Point& u, double tol = 1e-12) {
  const Interval r = rmm_envelope_reduced(bf, u);
  Envelope e{r.lower, r.upper, vertex_scan(bf, u), false, false};
  e.inf_matches_vertices = std::abs(e.inf - e.vertices.min) <= tol;
  e.sup_matches_vertices = std::abs(e.sup - e.vertices.max) <= tol;
  return e;
}

/// (lower F_X(x) lower F_Y(y), upper F_X(x) upper F_Y(y)).
inline Interval factorized_pbox(const PBox& px, const PBox& py, double x, double y) {
  return {px.lower().value(x) * py.lower().value(y), px.upper().value(x) * py.upper().value(y)};
}

}  // namespace shockcop
