#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace certbounds {

/// Raised when an operand leaves its mathematical domain (e.g. a radicand
/// that is genuinely negative, not merely negative through outward rounding).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

namespace rounding {

// Directed-rounding primitives built on error-free transformations:
// TwoSum residuals for +/- and fused multiply-add residuals for *, / and
// sqrt. Each returns the tightest double at or beyond the true real result.
// No rounding-mode switches are involved, so the kernels are pure functions
// and safe to call from any number of threads.
double add_down(double a, double b);
double add_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);  // requires b != 0
double div_up(double a, double b);
double sqrt_down(double a);  // requires a >= 0
double sqrt_up(double a);

}  // namespace rounding

/// Closed real interval [lo, hi] with certified outward-rounded arithmetic.
/// Endpoints are always finite, never NaN, and ordered.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}
  Interval(double lo, double hi);

  static Interval point(double v) { return Interval(v, v); }
  /// Certified enclosure of num/den, den > 0.
  static Interval rational(long long num, long long den);
  /// Certified enclosure of num/sqrt(k), k > 0.
  static Interval over_sqrt(long long num, long long k);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  /// Midpoint clamped into the interval (safe to use as a split point).
  double mid() const;

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);

 private:
  double lo_;
  double hi_;
};

/// Square root of a ∩ [0, ∞) with outward rounding. A lower endpoint below
/// zero is clamped to zero; throws DomainError when hi < -eps, i.e. the
/// radicand is negative beyond rounding tolerance.
Interval sqrt_clamped(const Interval& a, double eps);

/// a^n for n in {2, 3, 4}, computed as a power so that even powers of an
/// interval straddling zero are tight at zero.
Interval pow_int(const Interval& a, int n);

/// 1/a for a.lo > 0. Used by the derivative lift of sqrt; the bound
/// functions themselves never divide.
Interval recip_pos(const Interval& a);

Interval hull(const Interval& a, const Interval& b);

using Box = std::vector<Interval>;

}  // namespace certbounds
