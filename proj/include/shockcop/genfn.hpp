#pragma once

// Copula generating functions: the order-preserving extensions of a shock
// model's component distributions, the reflected rewrite f/g, the auxiliary
// star, substar and dagger maps, and validation of the condition sets.

#include <algorithm>
#include <limits>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shockcop/distfn.hpp"
#include "shockcop/extended_real.hpp"

namespace shockcop {

enum class GeneratorKind { Phi, Psi, Chi, RmmF, RmmG };

inline std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Phi: return "phi";
    case GeneratorKind::Psi: return "psi";
    case GeneratorKind::Chi: return "chi";
    case GeneratorKind::RmmF: return "rmm_f";
    case GeneratorKind::RmmG: return "rmm_g";
  }
  return "?";
}

inline GeneratorKind parse_generator_kind(const std::string& s) {
  if (s == "phi") return GeneratorKind::Phi;
  if (s == "psi") return GeneratorKind::Psi;
  if (s == "chi") return GeneratorKind::Chi;
  if (s == "rmm_f") return GeneratorKind::RmmF;
  if (s == "rmm_g") return GeneratorKind::RmmG;
  throw std::invalid_argument("unknown generator kind '" + s + "'");
}

/// Raised when an extension would divide by F_Z(x0) = 0 or 1 - F_Z(y0) = 0.
class DegenerateModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct GenNode {
  virtual ~GenNode() = default;
  virtual double eval(double u) const = 0;
  // Points of [0, 1] where the generator may change behaviour.
  virtual void special_points(std::vector<double>&) const {}
  virtual std::string describe() const = 0;
};

// x0 comes from bisection, so u can miss [ul, uu] by rounding on a continuous
// stretch. The branches agree at the ends; the slack is scaled so that taking
// the middle one moves the value by at most 1e-12.
inline constexpr double kBranchSlack = 1e-12;

// Order-preserving extension of a max-type generator. `comp` is F_X, `fz` is F_Z.
struct ExtendedMaxNode final : GenNode {
  DistributionFn comp, fz, fu;
  std::vector<double> bps;

  ExtendedMaxNode(DistributionFn c, DistributionFn z)
      : comp(std::move(c)), fz(std::move(z)), fu(lifetime_max(comp, fz)), bps(fu.breakpoints()) {}

  double at(double u, double x0) const {
    const double fz0 = fz.value(x0);
    const double xl = comp.left_limit(x0);
    const double xr = comp.right_limit(x0);
    const double ul = xl * fz0;
    const double uu = xr * fz0;
    if (u < ul - kBranchSlack * fz0) return xl;
    if (u > uu + kBranchSlack * fz0) return xr;
    if (fz0 == 0.0) throw DegenerateModelError("F_Z(x0) = 0 in the middle branch at u = " + fmt_num(u));
    return std::min(1.0, u / fz0);
  }

  double eval(double u) const override {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return at(u, fu.lower_quantile(u));
  }

  double eval_largest_x0(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return at(u, fu.upper_quantile(u));
  }

  void special_points(std::vector<double>& out) const override {
    for (double b : bps) {
      const double fz0 = fz.value(b);
      out.push_back(fu.left_limit(b));
      out.push_back(fu.value(b));
      out.push_back(fu.right_limit(b));
      out.push_back(comp.left_limit(b) * fz0);
      out.push_back(comp.right_limit(b) * fz0);
    }
    out.push_back(fu.lower_tail());
    out.push_back(fu.upper_tail());
  }

  std::string describe() const override {
    return "extended_max(component=" + comp.describe() + ", shock=" + fz.describe() + ")";
  }
};

// Order-preserving extension of a min-type generator chi. `comp` is F_Y.
struct ExtendedMinNode final : GenNode {
  DistributionFn comp, fz, fw;
  std::vector<double> bps;

  ExtendedMinNode(DistributionFn c, DistributionFn z)
      : comp(std::move(c)), fz(std::move(z)), fw(lifetime_min(comp, fz)), bps(fw.breakpoints()) {}

  double at(double v, double y0) const {
    const double fz0 = fz.value(y0);
    const double yl = comp.left_limit(y0);
    const double yr = comp.right_limit(y0);
    const double vl = complement_product(yl, fz0);
    const double vu = complement_product(yr, fz0);
    if (v < vl - kBranchSlack * (1.0 - fz0)) return yl;
    if (v > vu + kBranchSlack * (1.0 - fz0)) return yr;
    if (fz0 == 1.0) throw DegenerateModelError("F_Z(y0) = 1 in the middle branch at v = " + fmt_num(v));
    return std::clamp((v - fz0) / (1.0 - fz0), 0.0, 1.0);
  }

  double eval(double v) const override {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    return at(v, fw.lower_quantile(v));
  }

  double eval_largest_x0(double v) const {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    return at(v, fw.upper_quantile(v));
  }

  void special_points(std::vector<double>& out) const override {
    for (double b : bps) {
      const double fz0 = fz.value(b);
      out.push_back(fw.left_limit(b));
      out.push_back(fw.value(b));
      out.push_back(fw.right_limit(b));
      out.push_back(complement_product(comp.left_limit(b), fz0));
      out.push_back(complement_product(comp.right_limit(b), fz0));
    }
    out.push_back(fw.lower_tail());
    out.push_back(fw.upper_tail());
  }

  std::string describe() const override {
    return "extended_min(component=" + comp.describe() + ", shock=" + fz.describe() + ")";
  }
};

struct ClosedFormNode final : GenNode {
  std::string name;
  std::map<std::string, double> params;
  std::function<double(double)> fn;
  std::vector<double> specials;

  double eval(double u) const override { return fn(u); }
  void special_points(std::vector<double>& out) const override {
    out.insert(out.end(), specials.begin(), specials.end());
  }
  std::string describe() const override {
    std::string s = name + "(";
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) s += ", ";
      first = false;
      s += k + "=" + fmt_num(v);
    }
    return s + ")";
  }
};

struct TableEntry {
  double u;
  double value;
};

// Piecewise linear table. A repeated abscissa encodes a jump: the value at the
// abscissa is the first entry, the function continues from the last one.
struct TabulatedNode final : GenNode {
  std::vector<TableEntry> entries;

  explicit TabulatedNode(std::vector<TableEntry> e) : entries(std::move(e)) {
    if (entries.size() < 2) throw std::invalid_argument("generator table needs at least two entries");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& t = entries[k];
      if (!(t.u >= 0.0 && t.u <= 1.0) || !std::isfinite(t.value)) {
        throw std::invalid_argument("generator table entry outside [0, 1]");
      }
      if (k > 0 && entries[k - 1].u > t.u) throw std::invalid_argument("generator table must be sorted");
    }
    if (entries.front().u != 0.0 || entries.back().u != 1.0) {
      throw std::invalid_argument("generator table must span [0, 1]");
    }
  }

  double eval(double u) const override {
    u = std::clamp(u, 0.0, 1.0);
    auto it = std::lower_bound(entries.begin(), entries.end(), u,
                               [](const TableEntry& t, double v) { return t.u < v; });
    if (it != entries.end() && it->u == u) return it->value;
    const auto& a = *std::prev(it);
    const auto& b = *it;
    return a.value + (u - a.u) / (b.u - a.u) * (b.value - a.value);
  }

  void special_points(std::vector<double>& out) const override {
    for (std::size_t k = 1; k < entries.size(); ++k) {
      if (entries[k].u == entries[k - 1].u) out.push_back(entries[k].u);
    }
  }

  std::string describe() const override { return "table(" + std::to_string(entries.size()) + " entries)"; }
};

}  // namespace detail

/// Immutable handle to a generating function on [0, 1].
class Generator {
 public:
  Generator(GeneratorKind kind, std::shared_ptr<const detail::GenNode> node) : kind_(kind), node_(std::move(node)) {}

  GeneratorKind kind() const { return kind_; }
  double operator()(double u) const { return node_->eval(u); }
  double value(double u) const { return node_->eval(u); }

  /// Sorted candidate discontinuity / kink locations in [0, 1].
  std::vector<double> special_points() const {
    std::vector<double> out;
    node_->special_points(out);
    std::vector<double> kept;
    for (double s : out) {
      if (s >= 0.0 && s <= 1.0) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return kept;
  }

  std::string describe() const { return to_string(kind_) + ":" + node_->describe(); }

  /// Value obtained with the largest admissible x0 instead of the smallest,
  /// for extension-based generators; nullopt otherwise.
  std::optional<double> value_with_largest_x0(double u) const;

  bool is_extension() const;

  const detail::GenNode& node() const { return *node_; }

 private:
  GeneratorKind kind_;
  std::shared_ptr<const detail::GenNode> node_;
};

namespace detail {

// f(x) = phi(x) - x, or g(x) = 1 - x - chi(1 - x).
struct RewriteNode final : GenNode {
  Generator base;
  bool reflected;  // true when base is a chi
  RewriteNode(Generator b, bool r) : base(std::move(b)), reflected(r) {}
  double eval(double x) const override {
    if (reflected) return 1.0 - x - base(1.0 - x);
    return base(x) - x;
  }
  void special_points(std::vector<double>& out) const override {
    for (double s : base.special_points()) out.push_back(reflected ? 1.0 - s : s);
  }
  std::string describe() const override { return "rewrite(" + base.describe() + ")"; }
};

}  // namespace detail

inline std::optional<double> Generator::value_with_largest_x0(double u) const {
  if (auto* m = dynamic_cast<const detail::ExtendedMaxNode*>(node_.get())) return m->eval_largest_x0(u);
  if (auto* m = dynamic_cast<const detail::ExtendedMinNode*>(node_.get())) return m->eval_largest_x0(u);
  if (auto* r = dynamic_cast<const detail::RewriteNode*>(node_.get())) {
    if (auto inner = r->base.value_with_largest_x0(r->reflected ? 1.0 - u : u)) {
      return r->reflected ? 1.0 - u - *inner : *inner - u;
    }
  }
  return std::nullopt;
}

inline bool Generator::is_extension() const {
  if (dynamic_cast<const detail::ExtendedMaxNode*>(node_.get())) return true;
  if (dynamic_cast<const detail::ExtendedMinNode*>(node_.get())) return true;
  if (auto* r = dynamic_cast<const detail::RewriteNode*>(node_.get())) return r->base.is_extension();
  return false;
}

// ---------------------------------------------------------------------------
// Construction

inline Generator extend_phi(const DistributionFn& fx, const DistributionFn& fz) {
  return Generator(GeneratorKind::Phi, std::make_shared<detail::ExtendedMaxNode>(fx, fz));
}

inline Generator extend_psi(const DistributionFn& fy, const DistributionFn& fz) {
  return Generator(GeneratorKind::Psi, std::make_shared<detail::ExtendedMaxNode>(fy, fz));
}

inline Generator extend_chi(const DistributionFn& fy, const DistributionFn& fz) {
  return Generator(GeneratorKind::Chi, std::make_shared<detail::ExtendedMinNode>(fy, fz));
}

inline Generator to_rmm(const Generator& gen) {
  switch (gen.kind()) {
    case GeneratorKind::Phi:
    case GeneratorKind::Psi:
      return Generator(GeneratorKind::RmmF, std::make_shared<detail::RewriteNode>(gen, false));
    case GeneratorKind::Chi:
      return Generator(GeneratorKind::RmmG, std::make_shared<detail::RewriteNode>(gen, true));
    default:
      throw std::invalid_argument("to_rmm expects a phi or chi generator, got " + to_string(gen.kind()));
  }
}

inline Generator closed_form(GeneratorKind kind, std::string name, std::map<std::string, double> params,
                             std::function<double(double)> fn, std::vector<double> specials = {}) {
  auto node = std::make_shared<detail::ClosedFormNode>();
  node->name = std::move(name);
  node->params = std::move(params);
  node->fn = std::move(fn);
  node->specials = std::move(specials);
  return Generator(kind, std::move(node));
}

inline Generator tabulated(GeneratorKind kind, std::vector<detail::TableEntry> entries) {
  return Generator(kind, std::make_shared<detail::TabulatedNode>(std::move(entries)));
}

namespace forms {

/// u -> u. The trivial phi, psi or chi.
inline Generator identity(GeneratorKind kind) {
  return closed_form(kind, "identity", {}, [](double u) { return std::clamp(u, 0.0, 1.0); });
}

/// 0 at 0 and 1 on (0, 1]: phi of a shock that always binds.
inline Generator unit_step(GeneratorKind kind = GeneratorKind::Phi) {
  return closed_form(kind, "unitStep", {}, [](double u) { return u > 0.0 ? 1.0 : 0.0; }, {0.0});
}

/// 0 on [0, 1) and 1 at 1: chi of a shock that always binds.
inline Generator zero_until_one(GeneratorKind kind = GeneratorKind::Chi) {
  return closed_form(kind, "zeroUntilOne", {}, [](double u) { return u >= 1.0 ? 1.0 : 0.0; }, {1.0});
}

/// s * max{c - u, 0} on (0, 1], 0 at 0.
inline Generator truncated_linear(GeneratorKind kind, double c, double s = 1.0) {
  if (!(c >= 0.0 && c <= 1.0) || !(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("truncatedLinear needs c in [0, 1] and s in [0, 1]");
  }
  return closed_form(
      kind, "truncatedLinear", {{"c", c}, {"s", s}},
      [c, s](double u) { return u <= 0.0 ? 0.0 : s * std::max(c - u, 0.0); }, {0.0, c});
}

/// max{u, c} on (0, 1], 0 at 0.
inline Generator max_linear(GeneratorKind kind, double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("maxLinear needs c in [0, 1]");
  return closed_form(
      kind, "maxLinear", {{"c", c}}, [c](double u) { return u <= 0.0 ? 0.0 : std::min(1.0, std::max(u, c)); },
      {0.0, c});
}

/// min{u, c} on [0, 1), 1 at 1.
inline Generator min_linear(GeneratorKind kind, double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("minLinear needs c in [0, 1]");
  return closed_form(
      kind, "minLinear", {{"c", c}}, [c](double u) { return u >= 1.0 ? 1.0 : std::max(0.0, std::min(u, c)); },
      {c, 1.0});
}

/// u^a.
inline Generator power(GeneratorKind kind, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("power needs a positive exponent");
  return closed_form(kind, "power", {{"a", a}}, [a](double u) { return std::pow(std::clamp(u, 0.0, 1.0), a); });
}

/// s * u * (1 - u).
inline Generator parabola(GeneratorKind kind, double s) {
  return closed_form(kind, "parabola", {{"s", s}}, [s](double u) { return s * u * (1.0 - u); });
}

}  // namespace forms

/// Piecewise linear table on `samples` uniform knots plus the generator's
/// special points, with the right limit at 0 kept as a jump.
inline Generator tabulate(const Generator& gen, int samples = 2049) {
  if (samples < 2) throw std::invalid_argument("tabulate needs at least two samples");
  std::vector<double> us;
  for (int k = 0; k < samples; ++k) us.push_back(static_cast<double>(k) / (samples - 1));
  for (double s : gen.special_points()) us.push_back(s);
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  std::vector<detail::TableEntry> entries;
  for (double u : us) {
    entries.push_back({u, gen(u)});
    if (u == 0.0) {
      const double right = gen(1e-300);
      if (right != entries.back().value) entries.push_back({0.0, right});
    }
  }
  return tabulated(gen.kind(), std::move(entries));
}

// ---------------------------------------------------------------------------
// Auxiliary maps

namespace detail {

// lim_{u -> 0+} gen(u) / u, or +inf when the ratio does not settle.
inline ExtendedReal ratio_limit_at_zero(const Generator& gen) {
  const double h1 = std::ldexp(1.0, -30);
  const double h2 = std::ldexp(1.0, -60);
  const double r1 = gen(h1) / h1;
  const double r2 = gen(h2) / h2;
  if (!std::isfinite(r2)) return ExtendedReal::infinity();
  if (std::abs(r2 - r1) <= 1e-6 * std::max(1.0, std::abs(r1))) return ExtendedReal(std::max(0.0, r2));
  return ExtendedReal::infinity();
}

}  // namespace detail

/// phi*(u) = phi(u)/u for phi and psi; f*(u) = f(u)/u for rmm generators.
/// At u = 0 the right limit is returned when it exists, +inf otherwise.
inline ExtendedReal star(const Generator& gen, double u) {
  if (gen.kind() == GeneratorKind::Chi) throw std::invalid_argument("star is not defined for chi; use substar_chi");
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("star argument outside [0, 1]");
  if (u == 0.0) return detail::ratio_limit_at_zero(gen);
  return ExtendedReal(std::max(0.0, gen(u) / u));
}

/// chi_*(v): (1 - chi(v)) / (v - chi(v)) if v != chi(v), +inf if v = chi(v) != 1, 1 if v = 1.
inline ExtendedReal substar_chi(const Generator& gen, double v) {
  if (gen.kind() != GeneratorKind::Chi) throw std::invalid_argument("substar_chi expects a chi generator");
  if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("substar argument outside [0, 1]");
  if (v == 1.0) return ExtendedReal(1.0);
  const double c = gen(v);
  if (v == c) return ExtendedReal::infinity();
  return ExtendedReal(std::max(0.0, (1.0 - c) / (v - c)));
}

/// u/phi(u) for max-type generators (u > 0); (u - chi(u))/(1 - chi(u)) for chi (u < 1).
inline double dagger(const Generator& gen, double u) {
  switch (gen.kind()) {
    case GeneratorKind::Phi:
    case GeneratorKind::Psi: {
      if (!(u > 0.0 && u <= 1.0)) throw std::domain_error("dagger of phi is undefined at u = " + detail::fmt_num(u));
      const double p = gen(u);
      if (p <= 0.0) throw std::domain_error("dagger of phi divides by phi(u) = 0");
      return u / p;
    }
    case GeneratorKind::Chi: {
      if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("dagger of chi is undefined at u = " + detail::fmt_num(u));
      const double c = gen(u);
      if (c >= 1.0) throw std::domain_error("dagger of chi divides by 1 - chi(u) = 0");
      return (u - c) / (1.0 - c);
    }
    default:
      throw std::invalid_argument("dagger expects a phi, psi or chi generator");
  }
}

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string condition;
  std::string description;
  std::vector<double> witnesses;  // first few offending u values
  std::size_t count = 0;
};

struct ValidationReport {
  GeneratorKind kind{};
  std::size_t points_checked = 0;
  std::vector<Violation> violations;
  // Largest gap between values just left and right of a special point in (0, 1].
  double continuity_gap = 0.0;
  double continuity_location = 0.0;
  // Largest change of an extension value when the largest x0 replaces the smallest.
  double x0_discrepancy = 0.0;
  double x0_location = 0.0;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& condition) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.condition == condition; });
  }
};

namespace detail {

class ViolationCollector {
 public:
  explicit ViolationCollector(std::vector<Violation>& out) : out_(out) {}
  void flag(const std::string& condition, const std::string& description, double witness) {
    auto it = std::find_if(out_.begin(), out_.end(),
                           [&](const Violation& v) { return v.condition == condition && v.description == description; });
    if (it == out_.end()) {
      out_.push_back({condition, description, {}, 0});
      it = std::prev(out_.end());
    }
    ++it->count;
    if (it->witnesses.size() < 5) it->witnesses.push_back(witness);
  }

 private:
  std::vector<Violation>& out_;
};

// chi_* with near-equal v and chi(v) treated as the infinite case.
inline double substar_tol(double v, double c, double tol) {
  if (v >= 1.0) return 1.0;
  if (v - c <= tol) return kInfinity;
  return (1.0 - c) / (v - c);
}

// Rounding error of chi_* from a few ulps of error in chi(v); blows up as chi(v) -> v.
inline double substar_rounding(double v, double c) {
  if (v >= 1.0 || v - c <= 0.0) return 0.0;
  const double d = v - c;
  return 8.0 * std::numeric_limits<double>::epsilon() * ((1.0 - v) / (d * d) + 1.0 / d);
}

inline bool le_tol(double a, double b, double tol) { return a <= b + tol * std::max(1.0, std::abs(b)); }

}  // namespace detail

/// Checks the condition set of the generator's kind on a uniform grid of
/// `samples` points plus all special points. Violations are reported, not thrown.
inline ValidationReport validate(const Generator& gen, int samples, double tol = 1e-12) {
  if (samples < 2) throw std::invalid_argument("validate needs at least two samples");
  ValidationReport rep;
  rep.kind = gen.kind();
  std::vector<double> us;
  for (int k = 0; k < samples; ++k) us.push_back(static_cast<double>(k) / (samples - 1));
  const auto specials = gen.special_points();
  for (double s : specials) {
    us.push_back(s);
    us.push_back(std::max(0.0, s - 1e-9));
    us.push_back(std::min(1.0, s + 1e-9));
  }
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  rep.points_checked = us.size();

  std::vector<double> vals(us.size());
  for (std::size_t k = 0; k < us.size(); ++k) vals[k] = gen(us[k]);

  detail::ViolationCollector flag(rep.violations);
  const GeneratorKind kind = gen.kind();
  const bool max_type = kind == GeneratorKind::Phi || kind == GeneratorKind::Psi;
  const bool rmm = kind == GeneratorKind::RmmF || kind == GeneratorKind::RmmG;
  const std::string c1 = max_type ? "P1" : (rmm ? "G1" : "F1");
  const std::string c2 = max_type ? "P2" : (rmm ? "G2" : "F2");
  const std::string c3 = max_type ? "P3" : (rmm ? "G3" : "F3");
  // Marshall's numbering puts monotonicity first and endpoints second.
  const std::string endpoint_cond = max_type ? c2 : c1;
  const std::string monotone_cond = max_type ? c1 : c2;

  const double v0 = gen(0.0);
  const double v1 = gen(1.0);
  if (std::abs(v0) > tol) flag.flag(endpoint_cond, "value at 0 must be 0", 0.0);
  if (rmm) {
    if (std::abs(v1) > tol) flag.flag(endpoint_cond, "value at 1 must be 0", 1.0);
  } else if (std::abs(v1 - 1.0) > tol) {
    flag.flag(endpoint_cond, "value at 1 must be 1", 1.0);
  }

  for (std::size_t k = 0; k < us.size(); ++k) {
    const double u = us[k];
    const double g = vals[k];
    if (!(g >= -tol && g <= 1.0 + tol)) flag.flag(endpoint_cond, "value outside [0, 1]", u);
    if (max_type && u > 0.0 && g < u - tol) flag.flag(c3, "phi(u) >= u fails (star below 1)", u);
    if (kind == GeneratorKind::Chi && g > u + tol) flag.flag(c3, "chi(v) <= v fails (substar below 1)", u);
  }

  for (std::size_t k = 1; k < us.size(); ++k) {
    const double ua = us[k - 1], ub = us[k];
    const double ga = vals[k - 1], gb = vals[k];
    if (rmm) {
      if (!detail::le_tol(ga + ua, gb + ub, tol)) flag.flag(c2, "u + f(u) is not increasing", ub);
      if (ua > 0.0 && !detail::le_tol(gb / ub, ga / ua, tol)) flag.flag(c3, "f(u)/u is not decreasing", ub);
    } else {
      if (!detail::le_tol(ga, gb, tol)) flag.flag(monotone_cond, "generator is not increasing", ub);
      if (max_type && ua > 0.0 && !detail::le_tol(gb / ub, ga / ua, tol)) {
        flag.flag(c3, "phi(u)/u is not decreasing", ub);
      }
      if (kind == GeneratorKind::Chi) {
        const double sa = detail::substar_tol(ua, ga, tol);
        const double sb = detail::substar_tol(ub, gb, tol);
        const double slack = detail::substar_rounding(ua, ga) + detail::substar_rounding(ub, gb);
        if (!(sb <= sa || sb <= sa + slack || detail::le_tol(sb, sa, tol))) {
          flag.flag(c3, "chi_* is not decreasing", ub);
        }
      }
    }
  }
  if (rmm) {
    const double fs1 = gen(1.0);
    if (std::abs(fs1) > tol) flag.flag(c1, "f*(1) must be 0", 1.0);
  }

  // chi may jump at 1 and the others at 0, so those endpoints are left out.
  const bool chi = kind == GeneratorKind::Chi;
  for (double s : specials) {
    if (chi ? s >= 1.0 : s <= 0.0) continue;
    const double left = gen(std::max(0.0, s - 1e-9));
    const double right = gen(std::min(1.0, s + 1e-9));
    const double gap = std::max(std::abs(gen(s) - left), std::abs(right - gen(s)));
    if (gap > rep.continuity_gap) {
      rep.continuity_gap = gap;
      rep.continuity_location = s;
    }
  }

  if (gen.is_extension()) {
    for (double u : us) {
      if (auto alt = gen.value_with_largest_x0(u)) {
        const double d = std::abs(*alt - gen(u));
        if (d > rep.x0_discrepancy) {
          rep.x0_discrepancy = d;
          rep.x0_location = u;
        }
      }
    }
  }
  return rep;
}

}  // namespace shockcop
