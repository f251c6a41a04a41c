#pragma once

// Independent oracles and property checkers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "shockcop/copulas.hpp"
#include "shockcop/distfn.hpp"
#include "shockcop/model.hpp"

namespace shockcop {

using CopulaFn = std::function<double(const Point&)>;

// ---------------------------------------------------------------------------
// Rectangle volumes

struct Box {
  std::vector<std::pair<double, double>> sides;  // (low, high) per dimension
};

struct RectangleReport {
  Box box;
  double volume = 0.0;
  bool pass = true;
};

/// Inclusion-exclusion over the 2^n corners, sign (-1)^(number of low corners).
inline double rectangle_volume(const CopulaFn& c, const Box& box, int n) {
  if (static_cast<int>(box.sides.size()) != n) {
    throw std::invalid_argument("box has " + std::to_string(box.sides.size()) + " sides, expected " +
                                std::to_string(n));
  }
  double vol = 0.0;
  Point corner(static_cast<std::size_t>(n));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int lows = 0;
    for (int d = 0; d < n; ++d) {
      const bool low = (mask >> d) & 1u;
      lows += low;
      corner[static_cast<std::size_t>(d)] = low ? box.sides[static_cast<std::size_t>(d)].first
                                                : box.sides[static_cast<std::size_t>(d)].second;
    }
    vol += (lows % 2 == 0 ? 1.0 : -1.0) * c(corner);
  }
  return vol;
}

inline RectangleReport check_rectangle(const CopulaFn& c, const Box& box, int n, double tol = 1e-12) {
  RectangleReport r{box, rectangle_volume(c, box, n), true};
  r.pass = r.volume >= -tol;
  return r;
}

// ---------------------------------------------------------------------------
// Grid checks

struct GridCheckFailure {
  std::string property;  // "grounded", "margin", "volume", "monotone", "lipschitz"
  Point point;           // grid point (cell low corner for volume)
  double expected = 0.0;
  double actual = 0.0;
};

struct GridCheckReport {
  int n = 0;
  int grid_size = 0;
  std::size_t points = 0;
  std::size_t cells = 0;
  double worst_margin_error = 0.0;
  double worst_volume = 0.0;  // most negative cell volume seen (0 if none)
  std::vector<GridCheckFailure> failures;
  std::size_t failure_count = 0;

  bool pass() const { return failure_count == 0; }
};

namespace detail {

class GridValues {
 public:
  GridValues(const CopulaFn& c, int n, int m) : n_(n), m_(m) {
    std::size_t total = 1;
    for (int d = 0; d < n; ++d) total *= static_cast<std::size_t>(m);
    values_.resize(total);
    Point u(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < total; ++idx) {
      coords(idx, u);
      values_[idx] = c(u);
    }
  }

  double axis(int k) const { return static_cast<double>(k) / (m_ - 1); }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t idx) const { return values_[idx]; }

  // Index digits, first coordinate fastest.
  void digits(std::size_t idx, std::vector<int>& out) const {
    out.resize(static_cast<std::size_t>(n_));
    for (int d = 0; d < n_; ++d) {
      out[static_cast<std::size_t>(d)] = static_cast<int>(idx % static_cast<std::size_t>(m_));
      idx /= static_cast<std::size_t>(m_);
    }
  }
  void coords(std::size_t idx, Point& u) const {
    for (int d = 0; d < n_; ++d) {
      u[static_cast<std::size_t>(d)] = axis(static_cast<int>(idx % static_cast<std::size_t>(m_)));
      idx /= static_cast<std::size_t>(m_);
    }
  }
  std::size_t stride(int d) const {
    std::size_t s = 1;
    for (int k = 0; k < d; ++k) s *= static_cast<std::size_t>(m_);
    return s;
  }

 private:
  int n_, m_;
  std::vector<double> values_;
};

inline void record(GridCheckReport& rep, GridCheckFailure f) {
  ++rep.failure_count;
  if (rep.failures.size() < 20) rep.failures.push_back(std::move(f));
}

inline void check_margins(const GridValues& g, GridCheckReport& rep, double tol) {
  std::vector<int> dig;
  Point u(static_cast<std::size_t>(rep.n));
  const int last = rep.grid_size - 1;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    g.digits(idx, dig);
    g.coords(idx, u);
    int zeros = 0, ones = 0, free_dim = -1;
    for (int d = 0; d < rep.n; ++d) {
      if (dig[static_cast<std::size_t>(d)] == 0) ++zeros;
      else if (dig[static_cast<std::size_t>(d)] == last) ++ones;
      else free_dim = d;
    }
    const double v = g[idx];
    if (zeros > 0) {
      rep.worst_margin_error = std::max(rep.worst_margin_error, std::abs(v));
      if (std::abs(v) > tol) record(rep, {"grounded", u, 0.0, v});
    } else if (ones >= rep.n - 1) {
      // All coordinates at 1 except possibly one.
      double expected = 1.0;
      if (ones == rep.n - 1) expected = u[static_cast<std::size_t>(free_dim)];
      rep.worst_margin_error = std::max(rep.worst_margin_error, std::abs(v - expected));
      if (std::abs(v - expected) > tol) record(rep, {"margin", u, expected, v});
    }
  }
}

}  // namespace detail

/// Groundedness, uniform margins and nonnegative volume of every grid cell on
/// a uniform grid of `grid_size` points per axis.
inline GridCheckReport check_copula(const CopulaFn& c, int n, int grid_size, double tol = 1e-12) {
  if (n < 1 || grid_size < 2) throw std::invalid_argument("check_copula needs n >= 1 and grid_size >= 2");
  GridCheckReport rep;
  rep.n = n;
  rep.grid_size = grid_size;
  detail::GridValues g(c, n, grid_size);
  rep.points = g.size();
  detail::check_margins(g, rep, tol);

  std::vector<int> dig;
  Point u(static_cast<std::size_t>(n));
  std::vector<std::size_t> strides;
  for (int d = 0; d < n; ++d) strides.push_back(g.stride(d));
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    g.digits(idx, dig);
    if (std::any_of(dig.begin(), dig.end(), [&](int k) { return k == grid_size - 1; })) continue;
    ++rep.cells;
    double vol = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::size_t corner = idx;
      int lows = 0;
      for (int d = 0; d < n; ++d) {
        if ((mask >> d) & 1u) corner += strides[static_cast<std::size_t>(d)];
        else ++lows;
      }
      vol += (lows % 2 == 0 ? 1.0 : -1.0) * g[corner];
    }
    rep.worst_volume = std::min(rep.worst_volume, vol);
    if (vol < -tol) {
      g.coords(idx, u);
      detail::record(rep, {"volume", u, 0.0, vol});
    }
  }
  return rep;
}

/// Groundedness, margins, componentwise monotonicity and the 1-Lipschitz
/// property along every grid line.
inline GridCheckReport check_quasicopula(const CopulaFn& c, int n, int grid_size, double tol = 1e-12) {
  if (n < 1 || grid_size < 2) throw std::invalid_argument("check_quasicopula needs n >= 1 and grid_size >= 2");
  GridCheckReport rep;
  rep.n = n;
  rep.grid_size = grid_size;
  detail::GridValues g(c, n, grid_size);
  rep.points = g.size();
  detail::check_margins(g, rep, tol);

  std::vector<int> dig;
  Point u(static_cast<std::size_t>(n));
  const double h = 1.0 / (grid_size - 1);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    g.digits(idx, dig);
    for (int d = 0; d < n; ++d) {
      if (dig[static_cast<std::size_t>(d)] == grid_size - 1) continue;
      const double diff = g[idx + g.stride(d)] - g[idx];
      if (diff < -tol) {
        g.coords(idx, u);
        detail::record(rep, {"monotone", u, 0.0, diff});
      }
      if (diff > h + tol) {
        g.coords(idx, u);
        detail::record(rep, {"lipschitz", u, h, diff});
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exact enumeration oracle for all-discrete models

/// Enumerates every support combination of (X_1, ..., X_n, Z) of a precise
/// model whose distributions are all discrete (or finite Dirac steps).
class DiscreteModelOracle {
 public:
  static constexpr int kMaxSupport = 8;
  static constexpr int kMaxDimension = 6;

  explicit DiscreteModelOracle(const ShockModel& model) : model_(model) {
    if (model.n() > kMaxDimension) throw std::invalid_argument("enumeration oracle supports n <= 6");
    const auto comps = model.components();
    std::vector<std::vector<Atom>> supports;
    for (const auto& f : comps) supports.push_back(support_of(f));
    supports.push_back(support_of(model.exogenous()));

    const int n = model.n();
    std::vector<std::size_t> idx(supports.size(), 0);
    while (true) {
      double prob = 1.0;
      for (std::size_t k = 0; k < supports.size(); ++k) prob *= supports[k][idx[k]].mass;
      const double z = supports.back()[idx.back()].location;
      Outcome o{Point(static_cast<std::size_t>(n)), prob};
      for (int i = 0; i < n; ++i) {
        const double xi = supports[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]].location;
        o.u[static_cast<std::size_t>(i)] = model.is_max_type(i) ? std::max(xi, z) : std::min(xi, z);
      }
      outcomes_.push_back(std::move(o));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == supports[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }

  std::size_t outcome_count() const { return outcomes_.size(); }

  double total_probability() const {
    double s = 0.0;
    for (const auto& o : outcomes_) s += o.prob;
    return s;
  }

  /// P(U_i <= x_i for max-type i, and U_j <= x_j, or U_j > x_j when
  /// `reflected_tail`, for min-type j).
  double exact_joint(const Point& x, bool reflected_tail) const {
    if (static_cast<int>(x.size()) != model_.n()) throw std::invalid_argument("point dimension does not match the model");
    double s = 0.0;
    for (const auto& o : outcomes_) {
      bool in = true;
      for (int i = 0; i < model_.n() && in; ++i) {
        const double ui = o.u[static_cast<std::size_t>(i)];
        const double xi = x[static_cast<std::size_t>(i)];
        if (reflected_tail && !model_.is_max_type(i)) in = ui > xi;
        else in = ui <= xi;
      }
      if (in) s += o.prob;
    }
    return s;
  }

 private:
  struct Outcome {
    Point u;
    double prob;
  };

  static std::vector<Atom> support_of(const DistributionFn& f) {
    auto atoms = f.atoms();
    if (!atoms) throw std::invalid_argument("enumeration oracle needs discrete distributions, got " + f.describe());
    if (static_cast<int>(atoms->size()) > kMaxSupport) {
      throw std::invalid_argument("enumeration oracle supports at most 8 support points per distribution");
    }
    for (const auto& a : *atoms) {
      if (!std::isfinite(a.location)) throw std::invalid_argument("enumeration oracle needs finite support points");
    }
    return *atoms;
  }

  ShockModel model_;
  std::vector<Outcome> outcomes_;
};

// ---------------------------------------------------------------------------
// Monte Carlo

/// 64-bit Mersenne Twister with splitmix64 seeding of independent streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Seed of stream `index` derived from a master seed.
  static std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t next() { return engine_(); }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Inverse-transform sample of a parametric or discrete distribution.
inline double sample(const DistributionFn& f, double u) {
  const auto& node = f.node();
  switch (f.kind()) {
    case DistKind::Exponential:
      return -std::log1p(-u) / static_cast<const detail::ExponentialNode&>(node).rate;
    case DistKind::Dirac:
      return static_cast<const detail::DiracNode&>(node).location;
    case DistKind::Uniform: {
      const auto& un = static_cast<const detail::UniformNode&>(node);
      return un.a + u * (un.b - un.a);
    }
    case DistKind::Discrete: {
      const auto& d = static_cast<const detail::DiscreteNode&>(node);
      auto it = std::upper_bound(d.cumulative.begin(), d.cumulative.end(), u);
      if (it == d.cumulative.end()) --it;
      return d.locations[static_cast<std::size_t>(it - d.cumulative.begin())];
    }
    default:
      throw std::invalid_argument("Monte Carlo sampling does not support " + f.describe());
  }
}

struct MonteCarloEstimate {
  double estimate;
  double stderr_;
  std::uint64_t hits;
  std::uint64_t samples;
};

/// Estimates the joint probabilities of exact_joint at every point from N
/// samples. Samples are drawn in fixed-size chunks, chunk k using stream
/// Rng::stream_seed(seed, k) and drawing X_1..X_n then Z per sample; chunk
/// counts are summed in chunk order, so the result does not depend on the
/// number of worker threads.
inline std::vector<MonteCarloEstimate> monte_carlo_joint(const ShockModel& model, const std::vector<Point>& points,
                                                         std::uint64_t N, std::uint64_t seed, bool reflected_tail,
                                                         unsigned threads = 0) {
  if (N == 0) throw std::invalid_argument("Monte Carlo needs N >= 1");
  const auto comps = model.components();
  for (const auto& f : comps) sample(f, 0.5);
  sample(model.exogenous(), 0.5);
  const int n = model.n();
  for (const auto& x : points) {
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("point dimension does not match the model");
  }

  constexpr std::uint64_t kChunk = 1u << 16;
  const std::uint64_t chunks = (N + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> counts(chunks, std::vector<std::uint64_t>(points.size(), 0));

  auto run_chunk = [&](std::uint64_t c) {
    Rng rng(Rng::stream_seed(seed, c));
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min(N, begin + kChunk);
    Point u(static_cast<std::size_t>(n));
    auto& cnt = counts[c];
    for (std::uint64_t s = begin; s < end; ++s) {
      for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = sample(comps[static_cast<std::size_t>(i)], rng.uniform());
      const double z = sample(model.exogenous(), rng.uniform());
      for (int i = 0; i < n; ++i) {
        auto& ui = u[static_cast<std::size_t>(i)];
        ui = model.is_max_type(i) ? std::max(ui, z) : std::min(ui, z);
      }
      for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& x = points[k];
        bool in = true;
        for (int i = 0; i < n && in; ++i) {
          const double ui = u[static_cast<std::size_t>(i)];
          const double xi = x[static_cast<std::size_t>(i)];
          in = (reflected_tail && !model.is_max_type(i)) ? ui > xi : ui <= xi;
        }
        cnt[k] += in;
      }
    }
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<MonteCarloEstimate> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::uint64_t hits = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) hits += counts[c][k];
    const double p = static_cast<double>(hits) / static_cast<double>(N);
    out.push_back({p, std::sqrt(p * (1.0 - p) / static_cast<double>(N)), hits, N});
  }
  return out;
}

}  // namespace shockcop
