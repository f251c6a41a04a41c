#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace shockcop {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A real number or +infinity. Codomain of the star and substar maps.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;

  explicit ExtendedReal(double value) : value_(value) {
    if (std::isnan(value)) throw std::invalid_argument("ExtendedReal: NaN");
    if (value == -kInfinity) throw std::invalid_argument("ExtendedReal: -inf");
  }

  static ExtendedReal infinity() { return ExtendedReal(kInfinity); }

  bool is_infinite() const { return value_ == kInfinity; }
  bool is_finite() const { return !is_infinite(); }

  /// Finite value, or IEEE +inf when infinite.
  double value() const { return value_; }

  friend std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) { return a.value_ == b.value_; }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

 private:
  double value_ = 0.0;
};

}  // namespace shockcop
