#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shockcop/distfn.hpp"

namespace shockcop {

enum class Family { Marshall, MaxMin, Rmm };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::Marshall: return "marshall";
    case Family::MaxMin: return "maxmin";
    case Family::Rmm: return "rmm";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "marshall") return Family::Marshall;
  if (s == "maxmin") return Family::MaxMin;
  if (s == "rmm") return Family::Rmm;
  throw std::invalid_argument("unknown family '" + s + "' (expected marshall, maxmin or rmm)");
}

/// Which member of a p-box family to use.
enum class Level { Lower, Upper };

/// Univariate p-box: lower(x) <= upper(x) everywhere.
class PBox {
 public:
  PBox(DistributionFn lower, DistributionFn upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    check_order();
  }

  static PBox precise(const DistributionFn& f) { return PBox(f, f, true); }

  const DistributionFn& lower() const { return lower_; }
  const DistributionFn& upper() const { return upper_; }
  const DistributionFn& at(Level l) const { return l == Level::Lower ? lower_ : upper_; }
  bool is_degenerate() const { return lower_.same_as(upper_); }

  /// Points where the ordering is checked: breakpoints, their neighbours,
  /// quantiles of both bounds and a coarse grid.
  std::vector<double> probe_points() const {
    std::vector<double> pts;
    for (const auto* f : {&lower_, &upper_}) {
      for (double b : f->breakpoints()) {
        const double h = 1e-9 * std::max(1.0, std::abs(b));
        pts.insert(pts.end(), {b - h, b, b + h});
      }
      for (int k = 1; k < 100; ++k) {
        const double q = f->lower_quantile(k / 100.0);
        if (std::isfinite(q)) pts.push_back(q);
      }
    }
    for (int k = -40; k <= 40; ++k) pts.push_back(k * 0.25);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }

 private:
  PBox(DistributionFn lower, DistributionFn upper, bool) : lower_(std::move(lower)), upper_(std::move(upper)) {}

  void check_order() const {
    if (lower_.same_as(upper_)) return;
    for (double x : probe_points()) {
      const double tol = 1e-12;
      if (lower_.value(x) > upper_.value(x) + tol || lower_.left_limit(x) > upper_.left_limit(x) + tol ||
          lower_.right_limit(x) > upper_.right_limit(x) + tol) {
        throw std::invalid_argument("p-box bounds are not ordered: lower exceeds upper at x = " + detail::fmt_num(x));
      }
    }
  }

  DistributionFn lower_;
  DistributionFn upper_;
};

/// n endogenous shocks (p-boxes), one precise exogenous shock and the split
/// into max-type components {0..p-1} and min-type components {p..n-1}.
class ShockModel {
 public:
  static constexpr int kMaxDimension = 12;

  ShockModel(Family family, int p, std::vector<PBox> endogenous, DistributionFn exogenous)
      : family_(family), p_(p), endogenous_(std::move(endogenous)), exogenous_(std::move(exogenous)) {
    const int n = this->n();
    if (n < 2) throw std::invalid_argument("a shock model needs at least two components");
    if (n > kMaxDimension) throw std::invalid_argument("at most 12 components are supported");
    if (family_ == Family::Marshall) {
      if (p_ != n) throw std::invalid_argument("Marshall models need p = n");
    } else if (p_ < 1 || p_ > n - 1) {
      throw std::invalid_argument("maxmin and rmm models need 1 <= p <= n - 1");
    }
  }

  /// Precise model from plain distributions.
  static ShockModel precise(Family family, int p, const std::vector<DistributionFn>& comps,
                            const DistributionFn& exogenous) {
    std::vector<PBox> boxes;
    for (const auto& f : comps) boxes.push_back(PBox::precise(f));
    return ShockModel(family, p, std::move(boxes), exogenous);
  }

  Family family() const { return family_; }
  int n() const { return static_cast<int>(endogenous_.size()); }
  int p() const { return p_; }
  bool is_max_type(int i) const { return i < p_; }
  const std::vector<PBox>& endogenous() const { return endogenous_; }
  const PBox& component(int i) const { return endogenous_.at(static_cast<std::size_t>(i)); }
  const DistributionFn& exogenous() const { return exogenous_; }

  bool is_precise() const {
    return std::all_of(endogenous_.begin(), endogenous_.end(), [](const PBox& b) { return b.is_degenerate(); });
  }

  /// Component distributions of a precise model.
  std::vector<DistributionFn> components() const {
    if (!is_precise()) throw std::logic_error("model is imprecise; choose a member or a bound level");
    return bound_components(Level::Lower);
  }

  std::vector<DistributionFn> bound_components(Level level) const {
    std::vector<DistributionFn> out;
    for (const auto& b : endogenous_) out.push_back(b.at(level));
    return out;
  }

  /// Precise model with the given component distributions and this model's Z.
  ShockModel member(const std::vector<DistributionFn>& comps) const {
    if (static_cast<int>(comps.size()) != n()) throw std::invalid_argument("member needs one distribution per component");
    return precise(family_, p_, comps, exogenous_);
  }

  /// Lifetime distribution G_i of component i under the given component distribution.
  DistributionFn lifetime(int i, const DistributionFn& comp) const {
    return is_max_type(i) ? lifetime_max(comp, exogenous_) : lifetime_min(comp, exogenous_);
  }

 private:
  Family family_;
  int p_;
  std::vector<PBox> endogenous_;
  DistributionFn exogenous_;
};

}  // namespace shockcop
