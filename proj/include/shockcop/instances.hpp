#pragma once

// Random models and generators for property checks. All draws come from an
// explicit Rng so every instance is reproducible from its seed.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "shockcop/copulas.hpp"
#include "shockcop/distfn.hpp"
#include "shockcop/genfn.hpp"
#include "shockcop/imprecise.hpp"
#include "shockcop/model.hpp"
#include "shockcop/verify.hpp"

namespace shockcop::instances {

/// Discrete distribution on 1..max_points points of the lattice {0, ..., 5},
/// so that supports of different shocks collide.
inline DistributionFn random_lattice_discrete(Rng& rng, int max_points = 5) {
  const int k = rng.integer(1, max_points);
  std::vector<int> locs{0, 1, 2, 3, 4, 5};
  for (int i = 5; i > 0; --i) std::swap(locs[static_cast<std::size_t>(i)], locs[static_cast<std::size_t>(rng.integer(0, i))]);
  std::vector<Atom> atoms;
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    const double m = 0.05 + rng.uniform();
    atoms.push_back({static_cast<double>(locs[static_cast<std::size_t>(i)]), m});
    total += m;
  }
  for (auto& a : atoms) a.mass /= total;
  return DistributionFn::discrete(atoms);
}

inline int random_partition(Rng& rng, Family family, int n) {
  return family == Family::Marshall ? n : rng.integer(1, n - 1);
}

/// Precise all-discrete model with lattice supports.
inline ShockModel random_discrete_model(Rng& rng, Family family, int n, int max_points = 5) {
  std::vector<DistributionFn> comps;
  for (int i = 0; i < n; ++i) comps.push_back(random_lattice_discrete(rng, max_points));
  const auto z = random_lattice_discrete(rng, max_points);
  return ShockModel::precise(family, random_partition(rng, family, n), comps, z);
}

/// Evaluation point on the half-integer lattice around the supports.
inline Point random_lattice_point(Rng& rng, int n) {
  Point x(static_cast<std::size_t>(n));
  for (auto& v : x) v = 0.5 * rng.integer(-1, 11);
  return x;
}

/// One random p-box: exponential rates, shifted uniforms or shifted discretes.
inline PBox random_pbox(Rng& rng) {
  switch (rng.integer(0, 2)) {
    case 0: {
      const double a = rng.uniform(0.3, 2.0);
      const double b = a * rng.uniform(1.1, 3.0);
      return PBox(DistributionFn::exponential(a), DistributionFn::exponential(b));
    }
    case 1: {
      const double a = rng.uniform(0.0, 1.5);
      const double w = rng.uniform(0.5, 2.0);
      const double d = rng.uniform(0.1, 1.0);
      return PBox(DistributionFn::uniform(a + d, a + d + w), DistributionFn::uniform(a, a + w));
    }
    default: {
      const int k = rng.integer(1, 4);
      std::vector<Atom> lo, hi;
      double total = 0.0;
      std::vector<double> masses, locs;
      double x = rng.uniform(0.0, 1.0);
      for (int i = 0; i < k; ++i) {
        masses.push_back(0.1 + rng.uniform());
        total += masses.back();
        locs.push_back(x);
        x += rng.uniform(0.2, 1.0);
      }
      const double shift = rng.uniform(0.1, 0.8);
      for (int i = 0; i < k; ++i) {
        const auto s = static_cast<std::size_t>(i);
        hi.push_back({locs[s], masses[s] / total});
        lo.push_back({locs[s] + shift, masses[s] / total});
      }
      return PBox(DistributionFn::discrete(lo), DistributionFn::discrete(hi));
    }
  }
}

inline DistributionFn random_exogenous(Rng& rng) {
  switch (rng.integer(0, 3)) {
    case 0: return DistributionFn::exponential(rng.uniform(0.3, 2.0));
    case 1: return DistributionFn::dirac(rng.uniform(0.5, 2.0));
    case 2: {
      const double a = rng.uniform(0.0, 1.0);
      return DistributionFn::uniform(a, a + rng.uniform(0.5, 2.0));
    }
    default: {
      const double a = rng.uniform(0.2, 1.0);
      const double m = rng.uniform(0.2, 0.8);
      return DistributionFn::discrete({{a, m}, {a + rng.uniform(0.3, 1.5), 1.0 - m}});
    }
  }
}

/// Imprecise model with random p-box components and a precise Z.
inline ShockModel random_pbox_model(Rng& rng, Family family, int n) {
  std::vector<PBox> boxes;
  for (int i = 0; i < n; ++i) boxes.push_back(random_pbox(rng));
  const auto z = random_exogenous(rng);
  return ShockModel(family, random_partition(rng, family, n), std::move(boxes), z);
}

/// P-box with discrete bounds on the lattice: the upper bound moves mass of
/// the lower bound to smaller lattice points.
inline PBox random_discrete_pbox(Rng& rng, int max_points = 4) {
  const auto hi = random_lattice_discrete(rng, max_points);
  std::vector<Atom> lo;
  const auto hi_atoms = *hi.atoms();
  for (const auto& a : hi_atoms) lo.push_back({a.location + rng.integer(0, 2), a.mass});
  return PBox(DistributionFn::discrete(lo), hi);
}

/// Imprecise model whose bounds and Z are all discrete, for the enumeration oracle.
inline ShockModel random_discrete_pbox_model(Rng& rng, Family family, int n) {
  std::vector<PBox> boxes;
  for (int i = 0; i < n; ++i) boxes.push_back(random_discrete_pbox(rng));
  return ShockModel(family, random_partition(rng, family, n), std::move(boxes), random_lattice_discrete(rng, 4));
}

/// Piecewise linear distribution function with jumps and arbitrary point
/// values at the jumps.
inline DistributionFn random_pwl(Rng& rng) {
  const int k = rng.integer(2, 5);
  std::vector<double> levels;
  for (int i = 0; i < 3 * k; ++i) levels.push_back(rng.uniform());
  levels.front() = 0.0;
  levels.back() = 1.0;
  std::sort(levels.begin(), levels.end());
  std::vector<Breakpoint> bps;
  double x = rng.uniform(-1.0, 1.0);
  for (int i = 0; i < k; ++i) {
    const auto s = static_cast<std::size_t>(3 * i);
    bps.push_back({x, levels[s], levels[s + 1], levels[s + 2]});
    x += rng.uniform(0.1, 1.5);
  }
  return DistributionFn::piecewise_linear(bps);
}

/// Random distribution of any representation, nesting at most `depth` composites.
inline DistributionFn random_distribution(Rng& rng, int depth = 1) {
  const int kinds = depth > 0 ? 8 : 5;
  switch (rng.integer(0, kinds - 1)) {
    case 0: return DistributionFn::exponential(rng.uniform(0.2, 3.0));
    case 1: return DistributionFn::dirac(rng.uniform(-1.0, 3.0));
    case 2: {
      const double a = rng.uniform(-1.0, 2.0);
      return DistributionFn::uniform(a, a + rng.uniform(0.1, 2.0));
    }
    case 3: return random_lattice_discrete(rng);
    case 4: return random_pwl(rng);
    case 5: return DistributionFn::product(random_distribution(rng, depth - 1), random_distribution(rng, depth - 1));
    case 6:
      return DistributionFn::survival_complement_product(random_distribution(rng, depth - 1),
                                                         random_distribution(rng, depth - 1));
    default:
      return DistributionFn::mixture(rng.uniform(), random_distribution(rng, depth - 1),
                                     random_distribution(rng, depth - 1));
  }
}

/// Member theta * lower + (1 - theta) * upper of a p-box.
inline DistributionFn interior(const PBox& box, double theta) {
  if (box.is_degenerate()) return box.lower();
  return DistributionFn::mixture(theta, box.lower(), box.upper());
}

/// Random interior member of every component box; theta drawn from {0.1, ..., 0.9}.
inline std::vector<DistributionFn> random_member(Rng& rng, const ShockModel& model) {
  std::vector<DistributionFn> out;
  for (const auto& box : model.endogenous()) out.push_back(interior(box, 0.1 * rng.integer(1, 9)));
  return out;
}

/// s * max{c - u, 0} with c in (0, 1) and s in (0, 1].
inline Generator random_truncated_linear(Rng& rng, GeneratorKind kind) {
  return forms::truncated_linear(kind, rng.uniform(0.05, 0.95), rng.uniform(0.05, 1.0));
}

/// Random valid generator vector of the given family: truncated-linear for
/// rmm, extensions of a random discrete model otherwise.
inline GeneratorVector random_generator_vector(Rng& rng, Family family, int n) {
  if (family == Family::Rmm) {
    const int p = random_partition(rng, family, n);
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) {
      gens.push_back(random_truncated_linear(rng, i < p ? GeneratorKind::RmmF : GeneratorKind::RmmG));
    }
    return GeneratorVector::rmm(std::move(gens), p);
  }
  return model_generators(random_discrete_model(rng, family, n));
}

/// Ordered pair of truncated-linear rmm generator vectors, lower <= upper.
inline BoundFamily random_rmm_bounds(Rng& rng, int n) {
  const int p = random_partition(rng, Family::Rmm, n);
  std::vector<Generator> lo, hi;
  for (int i = 0; i < n; ++i) {
    const auto kind = i < p ? GeneratorKind::RmmF : GeneratorKind::RmmG;
    double c1 = rng.uniform(0.05, 0.95), c2 = rng.uniform(0.05, 0.95);
    double s1 = rng.uniform(0.05, 1.0), s2 = rng.uniform(0.05, 1.0);
    if (c1 > c2) std::swap(c1, c2);
    if (s1 > s2) std::swap(s1, s2);
    lo.push_back(forms::truncated_linear(kind, c1, s1));
    hi.push_back(forms::truncated_linear(kind, c2, s2));
  }
  return bounds_from_generators(GeneratorVector::rmm(std::move(lo), p), GeneratorVector::rmm(std::move(hi), p));
}

/// Uniform point of [0, 1]^n; each coordinate is 0 or 1 with probability 1/40.
inline Point random_unit_point(Rng& rng, int n) {
  Point u(static_cast<std::size_t>(n));
  for (auto& v : u) {
    const double r = rng.uniform();
    v = r < 0.025 ? 0.0 : r < 0.05 ? 1.0 : rng.uniform();
  }
  return u;
}

/// Points spread over the range where the model's distributions move:
/// mostly uniform between low and high quantiles, sometimes exact breakpoints.
class PointSampler {
 public:
  explicit PointSampler(const ShockModel& model) : n_(model.n()) {
    std::vector<DistributionFn> all;
    for (const auto& b : model.endogenous()) {
      all.push_back(b.lower());
      all.push_back(b.upper());
    }
    all.push_back(model.exogenous());
    lo_ = kInfinity;
    hi_ = -kInfinity;
    for (const auto& f : all) {
      for (double q : {0.001, 0.999}) {
        const double x = f.lower_quantile(q);
        if (std::isfinite(x)) {
          lo_ = std::min(lo_, x);
          hi_ = std::max(hi_, x);
        }
      }
      for (double b : f.breakpoints()) breaks_.push_back(b);
    }
    if (!std::isfinite(lo_)) {
      lo_ = -1.0;
      hi_ = 1.0;
    }
    lo_ -= 0.25;
    hi_ += 0.25;
  }

  Point operator()(Rng& rng) const {
    Point x(static_cast<std::size_t>(n_));
    for (auto& v : x) {
      if (!breaks_.empty() && rng.uniform() < 0.15) {
        v = breaks_[static_cast<std::size_t>(rng.integer(0, static_cast<int>(breaks_.size()) - 1))];
      } else {
        v = rng.uniform(lo_, hi_);
      }
    }
    return x;
  }

 private:
  int n_;
  double lo_, hi_;
  std::vector<double> breaks_;
};

}  // namespace shockcop::instances
