#pragma once

// Univariate distribution functions in the finitely additive sense: a
// distribution function is only required to be monotone increasing, with
// F(-inf) = 0 and F(+inf) = 1 at the sentinel points. Every representation
// reports its one-sided limits exactly, and is continuous between the points
// returned by breakpoints().

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shockcop/extended_real.hpp"

namespace shockcop {

enum class DistKind {
  Exponential,
  Dirac,
  Uniform,
  Discrete,
  PiecewiseLinear,
  Product,
  SurvivalComplementProduct,
  Mixture,
};

/// One breakpoint of a piecewise linear distribution function. The value at
/// `x` may be anywhere in [left, right]; right-continuity is not assumed.
struct Breakpoint {
  double x;
  double left;
  double point;
  double right;
};

/// A support point of a discrete distribution.
struct Atom {
  double location;
  double mass;
};

namespace detail {

struct DistNode {
  virtual ~DistNode() = default;
  virtual DistKind kind() const = 0;
  // The three evaluators below are only called with finite x.
  virtual double value(double x) const = 0;
  virtual double left(double x) const = 0;
  virtual double right(double x) const = 0;
  // lim F(x) as x -> -inf and x -> +inf.
  virtual double lower_tail() const = 0;
  virtual double upper_tail() const = 0;
  virtual void breakpoints(std::vector<double>& out) const = 0;
  // inf{x : F(x+) >= u} in closed form, for u in (0, 1).
  virtual std::optional<double> closed_quantile(double) const { return std::nullopt; }
  virtual std::optional<std::vector<Atom>> atoms() const { return std::nullopt; }
  virtual std::string describe() const = 0;
};

inline std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct ExponentialNode final : DistNode {
  double rate;
  explicit ExponentialNode(double r) : rate(r) {}
  DistKind kind() const override { return DistKind::Exponential; }
  double value(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); }
  double left(double x) const override { return value(x); }
  double right(double x) const override { return value(x); }
  double lower_tail() const override { return 0.0; }
  double upper_tail() const override { return 1.0; }
  void breakpoints(std::vector<double>& out) const override { out.push_back(0.0); }
  std::optional<double> closed_quantile(double u) const override { return -std::log1p(-u) / rate; }
  std::string describe() const override { return "exponential(rate=" + fmt_num(rate) + ")"; }
};

struct DiracNode final : DistNode {
  double location;  // may be +-inf
  explicit DiracNode(double a) : location(a) {}
  DistKind kind() const override { return DistKind::Dirac; }
  double value(double x) const override { return x >= location ? 1.0 : 0.0; }
  double left(double x) const override { return x > location ? 1.0 : 0.0; }
  double right(double x) const override { return x >= location ? 1.0 : 0.0; }
  double lower_tail() const override { return location == -kInfinity ? 1.0 : 0.0; }
  double upper_tail() const override { return location == kInfinity ? 0.0 : 1.0; }
  void breakpoints(std::vector<double>& out) const override {
    if (std::isfinite(location)) out.push_back(location);
  }
  std::optional<double> closed_quantile(double) const override { return location; }
  std::optional<std::vector<Atom>> atoms() const override {
    return std::vector<Atom>{{location, 1.0}};
  }
  std::string describe() const override { return "dirac(location=" + fmt_num(location) + ")"; }
};

struct UniformNode final : DistNode {
  double a, b;  // a < b
  UniformNode(double lo, double hi) : a(lo), b(hi) {}
  DistKind kind() const override { return DistKind::Uniform; }
  double value(double x) const override {
    if (x <= a) return 0.0;
    if (x >= b) return 1.0;
    return (x - a) / (b - a);
  }
  double left(double x) const override { return value(x); }
  double right(double x) const override { return value(x); }
  double lower_tail() const override { return 0.0; }
  double upper_tail() const override { return 1.0; }
  void breakpoints(std::vector<double>& out) const override {
    out.push_back(a);
    out.push_back(b);
  }
  std::optional<double> closed_quantile(double u) const override { return a + u * (b - a); }
  std::string describe() const override {
    return "uniform(a=" + fmt_num(a) + ", b=" + fmt_num(b) + ")";
  }
};

struct DiscreteNode final : DistNode {
  std::vector<double> locations;
  std::vector<double> masses;
  std::vector<double> cumulative;  // cumulative[k] = F(locations[k])

  explicit DiscreteNode(std::vector<Atom> pts) {
    if (pts.empty()) throw std::invalid_argument("discrete distribution needs at least one point");
    std::sort(pts.begin(), pts.end(), [](const Atom& l, const Atom& r) { return l.location < r.location; });
    double total = 0.0;
    for (const auto& p : pts) {
      if (!std::isfinite(p.location)) throw std::invalid_argument("discrete location must be finite");
      if (!(p.mass > 0.0)) throw std::invalid_argument("discrete masses must be positive");
      if (!locations.empty() && locations.back() == p.location) {
        masses.back() += p.mass;
      } else {
        locations.push_back(p.location);
        masses.push_back(p.mass);
      }
      total += p.mass;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("discrete masses sum to " + fmt_num(total) + ", expected 1");
    }
    double acc = 0.0;
    for (double m : masses) {
      acc += m;
      cumulative.push_back(acc);
    }
    cumulative.back() = 1.0;
  }

  DistKind kind() const override { return DistKind::Discrete; }
  double value(double x) const override {
    auto it = std::upper_bound(locations.begin(), locations.end(), x);
    if (it == locations.begin()) return 0.0;
    return cumulative[static_cast<std::size_t>(it - locations.begin()) - 1];
  }
  double left(double x) const override {
    auto it = std::lower_bound(locations.begin(), locations.end(), x);
    if (it == locations.begin()) return 0.0;
    return cumulative[static_cast<std::size_t>(it - locations.begin()) - 1];
  }
  double right(double x) const override { return value(x); }
  double lower_tail() const override { return 0.0; }
  double upper_tail() const override { return 1.0; }
  void breakpoints(std::vector<double>& out) const override {
    out.insert(out.end(), locations.begin(), locations.end());
  }
  std::optional<double> closed_quantile(double u) const override {
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) return kInfinity;
    return locations[static_cast<std::size_t>(it - cumulative.begin())];
  }
  std::optional<std::vector<Atom>> atoms() const override {
    std::vector<Atom> out;
    for (std::size_t k = 0; k < locations.size(); ++k) out.push_back({locations[k], masses[k]});
    return out;
  }
  std::string describe() const override {
    std::string s = "discrete(";
    for (std::size_t k = 0; k < locations.size(); ++k) {
      if (k) s += ", ";
      s += "[" + fmt_num(locations[k]) + ", " + fmt_num(masses[k]) + "]";
    }
    return s + ")";
  }
};

struct PiecewiseLinearNode final : DistNode {
  std::vector<Breakpoint> bps;

  explicit PiecewiseLinearNode(std::vector<Breakpoint> b) : bps(std::move(b)) {
    if (bps.empty()) throw std::invalid_argument("piecewise linear distribution needs breakpoints");
    for (std::size_t k = 0; k < bps.size(); ++k) {
      const auto& p = bps[k];
      if (!std::isfinite(p.x)) throw std::invalid_argument("breakpoint location must be finite");
      if (!(0.0 <= p.left && p.left <= p.point && p.point <= p.right && p.right <= 1.0)) {
        throw std::invalid_argument("breakpoint at " + fmt_num(p.x) +
                                    " violates 0 <= left <= point <= right <= 1");
      }
      if (k > 0) {
        if (!(bps[k - 1].x < p.x)) throw std::invalid_argument("breakpoints must be strictly increasing");
        if (bps[k - 1].right > p.left) throw std::invalid_argument("piecewise linear function is not monotone");
      }
    }
  }

  // Linear interpolation on the open segment after breakpoint k.
  double between(std::size_t k, double x) const {
    const auto& a = bps[k];
    const auto& b = bps[k + 1];
    double t = (x - a.x) / (b.x - a.x);
    return a.right + t * (b.left - a.right);
  }

  template <typename AtBreak>
  double eval(double x, AtBreak at_break) const {
    if (x < bps.front().x) return bps.front().left;
    if (x > bps.back().x) return bps.back().right;
    auto it = std::lower_bound(bps.begin(), bps.end(), x, [](const Breakpoint& p, double v) { return p.x < v; });
    if (it->x == x) return at_break(*it);
    return between(static_cast<std::size_t>(it - bps.begin()) - 1, x);
  }

  DistKind kind() const override { return DistKind::PiecewiseLinear; }
  double value(double x) const override { return eval(x, [](const Breakpoint& p) { return p.point; }); }
  double left(double x) const override { return eval(x, [](const Breakpoint& p) { return p.left; }); }
  double right(double x) const override { return eval(x, [](const Breakpoint& p) { return p.right; }); }
  double lower_tail() const override { return bps.front().left; }
  double upper_tail() const override { return bps.back().right; }
  void breakpoints(std::vector<double>& out) const override {
    for (const auto& p : bps) out.push_back(p.x);
  }
  std::string describe() const override {
    std::string s = "pwl(";
    for (std::size_t k = 0; k < bps.size(); ++k) {
      if (k) s += ", ";
      s += "[" + fmt_num(bps[k].x) + ", " + fmt_num(bps[k].left) + ", " + fmt_num(bps[k].point) + ", " +
           fmt_num(bps[k].right) + "]";
    }
    return s + ")";
  }
};

}  // namespace detail

/// Immutable, cheaply copyable handle to a distribution function.
class DistributionFn {
 public:
  static DistributionFn exponential(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) throw std::invalid_argument("exponential rate must be positive");
    return DistributionFn(std::make_shared<detail::ExponentialNode>(rate));
  }

  /// Unit step at `location`, with value 1 at the location. The location may be
  /// -inf (F == 1 on all finite reals) or +inf (F == 0 on all finite reals).
  static DistributionFn dirac(double location) {
    if (std::isnan(location)) throw std::invalid_argument("dirac location is NaN");
    return DistributionFn(std::make_shared<detail::DiracNode>(location));
  }

  static DistributionFn uniform(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
      throw std::invalid_argument("uniform requires finite a <= b");
    }
    if (a == b) return dirac(a);
    return DistributionFn(std::make_shared<detail::UniformNode>(a, b));
  }

  static DistributionFn discrete(std::vector<Atom> points) {
    return DistributionFn(std::make_shared<detail::DiscreteNode>(std::move(points)));
  }

  static DistributionFn piecewise_linear(std::vector<Breakpoint> breakpoints) {
    return DistributionFn(std::make_shared<detail::PiecewiseLinearNode>(std::move(breakpoints)));
  }

  /// Pointwise product F * G.
  static DistributionFn product(const DistributionFn& a, const DistributionFn& b);
  /// 1 - (1 - F)(1 - G), i.e. the survival function is the product of survivals.
  static DistributionFn survival_complement_product(const DistributionFn& a, const DistributionFn& b);
  /// weight * F + (1 - weight) * G.
  static DistributionFn mixture(double weight, const DistributionFn& a, const DistributionFn& b);

  DistKind kind() const { return node_->kind(); }

  double value(double x) const {
    if (std::isnan(x)) throw std::invalid_argument("distribution evaluated at NaN");
    if (x == -kInfinity) return 0.0;
    if (x == kInfinity) return 1.0;
    return node_->value(x);
  }
  double operator()(double x) const { return value(x); }

  /// sup of F(y) over y < x.
  double left_limit(double x) const {
    if (std::isnan(x)) throw std::invalid_argument("distribution evaluated at NaN");
    if (x == -kInfinity) return 0.0;
    if (x == kInfinity) return node_->upper_tail();
    return node_->left(x);
  }

  /// inf of F(y) over y > x.
  double right_limit(double x) const {
    if (std::isnan(x)) throw std::invalid_argument("distribution evaluated at NaN");
    if (x == -kInfinity) return node_->lower_tail();
    if (x == kInfinity) return 1.0;
    return node_->right(x);
  }

  double lower_tail() const { return node_->lower_tail(); }
  double upper_tail() const { return node_->upper_tail(); }

  /// Sorted, de-duplicated finite points outside of which F is continuous.
  std::vector<double> breakpoints() const {
    std::vector<double> out;
    node_->breakpoints(out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Support of a Discrete or finite Dirac distribution; nullopt otherwise.
  std::optional<std::vector<Atom>> atoms() const { return node_->atoms(); }

  /// Smallest x0 with F(x0-) <= u <= F(x0+), i.e. inf{x : F(x+) >= u}.
  /// Returns -inf when every finite x qualifies from the left and +inf when
  /// no finite x reaches u.
  double lower_quantile(double u) const;

  /// Largest x0 with F(x0-) <= u <= F(x0+), i.e. sup{x : F(x-) <= u}.
  double upper_quantile(double u) const;

  std::string describe() const { return node_->describe(); }

  /// True when both handles share one representation.
  bool same_as(const DistributionFn& other) const { return node_ == other.node_; }

  const detail::DistNode& node() const { return *node_; }

 private:
  explicit DistributionFn(std::shared_ptr<const detail::DistNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::DistNode> node_;
};

namespace detail {

struct ProductNode final : DistNode {
  DistributionFn a, b;
  ProductNode(DistributionFn l, DistributionFn r) : a(std::move(l)), b(std::move(r)) {}
  DistKind kind() const override { return DistKind::Product; }
  double value(double x) const override { return a.value(x) * b.value(x); }
  double left(double x) const override { return a.left_limit(x) * b.left_limit(x); }
  double right(double x) const override { return a.right_limit(x) * b.right_limit(x); }
  double lower_tail() const override { return a.lower_tail() * b.lower_tail(); }
  double upper_tail() const override { return a.upper_tail() * b.upper_tail(); }
  void breakpoints(std::vector<double>& out) const override {
    a.node().breakpoints(out);
    b.node().breakpoints(out);
  }
  std::string describe() const override { return "product(" + a.describe() + ", " + b.describe() + ")"; }
};

inline double complement_product(double p, double q) { return 1.0 - (1.0 - p) * (1.0 - q); }

struct SurvivalComplementProductNode final : DistNode {
  DistributionFn a, b;
  SurvivalComplementProductNode(DistributionFn l, DistributionFn r) : a(std::move(l)), b(std::move(r)) {}
  DistKind kind() const override { return DistKind::SurvivalComplementProduct; }
  double value(double x) const override { return complement_product(a.value(x), b.value(x)); }
  double left(double x) const override { return complement_product(a.left_limit(x), b.left_limit(x)); }
  double right(double x) const override { return complement_product(a.right_limit(x), b.right_limit(x)); }
  double lower_tail() const override { return complement_product(a.lower_tail(), b.lower_tail()); }
  double upper_tail() const override { return complement_product(a.upper_tail(), b.upper_tail()); }
  void breakpoints(std::vector<double>& out) const override {
    a.node().breakpoints(out);
    b.node().breakpoints(out);
  }
  std::string describe() const override {
    return "survival_complement_product(" + a.describe() + ", " + b.describe() + ")";
  }
};

struct MixtureNode final : DistNode {
  double w;
  DistributionFn a, b;
  MixtureNode(double weight, DistributionFn l, DistributionFn r) : w(weight), a(std::move(l)), b(std::move(r)) {}
  double mix(double p, double q) const { return w * p + (1.0 - w) * q; }
  DistKind kind() const override { return DistKind::Mixture; }
  double value(double x) const override { return mix(a.value(x), b.value(x)); }
  double left(double x) const override { return mix(a.left_limit(x), b.left_limit(x)); }
  double right(double x) const override { return mix(a.right_limit(x), b.right_limit(x)); }
  double lower_tail() const override { return mix(a.lower_tail(), b.lower_tail()); }
  double upper_tail() const override { return mix(a.upper_tail(), b.upper_tail()); }
  void breakpoints(std::vector<double>& out) const override {
    a.node().breakpoints(out);
    b.node().breakpoints(out);
  }
  std::optional<std::vector<Atom>> atoms() const override {
    auto pa = a.atoms();
    auto pb = b.atoms();
    if (!pa || !pb) return std::nullopt;
    std::map<double, double> merged;
    for (const auto& at : *pa) merged[at.location] += w * at.mass;
    for (const auto& at : *pb) merged[at.location] += (1.0 - w) * at.mass;
    std::vector<Atom> out;
    for (const auto& [loc, m] : merged) {
      if (m > 0.0) out.push_back({loc, m});
    }
    return out;
  }
  std::string describe() const override {
    return "mixture(" + fmt_num(w) + ", " + a.describe() + ", " + b.describe() + ")";
  }
};

// Bisection runs until the bracket holds adjacent doubles.
inline constexpr double kQuantileTolerance = 0.0;

// Smallest x in the open interval (a, b) with F(x) >= u, where F is
// continuous on (a, b) and F(a+) < u <= F(b-). nullopt means the infimum is b.
inline std::optional<double> first_at_least(const DistributionFn& F, double a, double b, double u) {
  double lo = a;
  if (lo == -kInfinity) {
    double step = 1.0;
    lo = std::isfinite(b) ? b - 1.0 : 0.0;
    for (int it = 0; F.value(lo) >= u; ++it) {
      if (it > 2100) return std::nullopt;
      lo -= step;
      step *= 2.0;
    }
  }
  double hi = b;
  bool found = false;
  if (hi == kInfinity) {
    double step = 1.0;
    hi = std::max(lo, 0.0) + 1.0;
    for (int it = 0; F.value(hi) < u; ++it) {
      if (it > 2100 || !std::isfinite(hi)) return std::nullopt;
      hi += step;
      step *= 2.0;
    }
    found = true;
  }
  while (hi - lo > kQuantileTolerance) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (F.value(mid) >= u) {
      hi = mid;
      found = true;
    } else {
      lo = mid;
    }
  }
  if (!found) return std::nullopt;
  return hi;
}

// Largest x in (a, b) with F(x) <= u, where F is continuous on (a, b) and
// F(a+) <= u < F(b-). nullopt means the supremum is a.
inline std::optional<double> last_at_most(const DistributionFn& F, double a, double b, double u) {
  double hi = b;
  if (hi == kInfinity) {
    double step = 1.0;
    hi = std::isfinite(a) ? a + 1.0 : 0.0;
    for (int it = 0; F.value(hi) <= u; ++it) {
      if (it > 2100) return std::nullopt;
      hi += step;
      step *= 2.0;
    }
  }
  double lo = a;
  bool found = false;
  if (lo == -kInfinity) {
    double step = 1.0;
    lo = std::min(hi, 0.0) - 1.0;
    for (int it = 0; F.value(lo) > u; ++it) {
      if (it > 2100 || !std::isfinite(lo)) return std::nullopt;
      lo -= step;
      step *= 2.0;
    }
    found = true;
  }
  while (hi - lo > kQuantileTolerance) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (F.value(mid) <= u) {
      lo = mid;
      found = true;
    } else {
      hi = mid;
    }
  }
  if (!found) return std::nullopt;
  return lo;
}

}  // namespace detail

inline DistributionFn DistributionFn::product(const DistributionFn& a, const DistributionFn& b) {
  return DistributionFn(std::make_shared<detail::ProductNode>(a, b));
}

inline DistributionFn DistributionFn::survival_complement_product(const DistributionFn& a,
                                                                  const DistributionFn& b) {
  return DistributionFn(std::make_shared<detail::SurvivalComplementProductNode>(a, b));
}

inline DistributionFn DistributionFn::mixture(double weight, const DistributionFn& a, const DistributionFn& b) {
  if (!(weight >= 0.0 && weight <= 1.0)) throw std::invalid_argument("mixture weight must lie in [0, 1]");
  return DistributionFn(std::make_shared<detail::MixtureNode>(weight, a, b));
}

inline double DistributionFn::lower_quantile(double u) const {
  if (auto q = node_->closed_quantile(u)) return *q;
  if (lower_tail() >= u) return -kInfinity;
  const auto bps = breakpoints();
  double prev = -kInfinity;
  for (std::size_t k = 0; k <= bps.size(); ++k) {
    const bool last = k == bps.size();
    const double b = last ? kInfinity : bps[k];
    // Open segment (prev, b); F(prev+) < u holds here.
    const double seg_top = last ? upper_tail() : left_limit(b);
    if (seg_top >= u) {
      if (auto x = detail::first_at_least(*this, prev, b, u)) return *x;
    }
    if (last) return kInfinity;
    if (right_limit(b) >= u) return b;
    prev = b;
  }
  return kInfinity;
}

inline double DistributionFn::upper_quantile(double u) const {
  if (upper_tail() <= u) return kInfinity;
  const auto bps = breakpoints();
  double next = kInfinity;
  for (std::size_t k = bps.size() + 1; k-- > 0;) {
    const bool first = k == 0;
    const double a = first ? -kInfinity : bps[k - 1];
    // Open segment (a, next); F(next-) > u holds here.
    const double seg_bottom = first ? lower_tail() : right_limit(a);
    if (seg_bottom <= u) {
      if (auto x = detail::last_at_most(*this, a, next, u)) return *x;
    }
    if (first) return -kInfinity;
    if (left_limit(a) <= u) return a;
    next = a;
  }
  return -kInfinity;
}

/// Survival function x -> 1 - F(x) of any callable distribution-like object.
/// Viewing a view again gives back the original values.
template <typename Base>
class SurvivalView {
 public:
  explicit SurvivalView(Base base) : base_(std::move(base)) {}
  double operator()(double x) const { return 1.0 - base_(x); }
  double value(double x) const { return (*this)(x); }
  const Base& base() const { return base_; }

 private:
  Base base_;
};

inline SurvivalView<DistributionFn> survival(const DistributionFn& F) { return SurvivalView<DistributionFn>(F); }

/// Distribution of max{X, Z} for independent X, Z: F_X * F_Z.
inline DistributionFn lifetime_max(const DistributionFn& fx, const DistributionFn& fz) {
  return DistributionFn::product(fx, fz);
}

/// Distribution of min{Y, Z} for independent Y, Z: survival is the product of survivals.
inline DistributionFn lifetime_min(const DistributionFn& fy, const DistributionFn& fz) {
  return DistributionFn::survival_complement_product(fy, fz);
}

}  // namespace shockcop
