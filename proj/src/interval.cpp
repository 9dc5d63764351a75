#include "certbounds/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace certbounds {
namespace rounding {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Knuth's branch-free TwoSum: returns the sign of the rounding error of
// fl(a + b), i.e. (a + b) - fl(a + b) exactly.
inline double two_sum_err(double a, double b, double s) {
  double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}
}  // namespace

double add_down(double a, double b) {
  double s = a + b;
  return two_sum_err(a, b, s) < 0.0 ? std::nextafter(s, -kInf) : s;
}

double add_up(double a, double b) {
  double s = a + b;
  return two_sum_err(a, b, s) > 0.0 ? std::nextafter(s, kInf) : s;
}

double mul_down(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);  // exact: a*b - p
  return err < 0.0 ? std::nextafter(p, -kInf) : p;
}

double mul_up(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return err > 0.0 ? std::nextafter(p, kInf) : p;
}

double div_down(double a, double b) {
  double q = a / b;
  double r = std::fma(q, b, -a);  // q*b - a, exact
  if (b > 0.0) return r > 0.0 ? std::nextafter(q, -kInf) : q;
  return r < 0.0 ? std::nextafter(q, -kInf) : q;
}

double div_up(double a, double b) {
  double q = a / b;
  double r = std::fma(q, b, -a);
  if (b > 0.0) return r < 0.0 ? std::nextafter(q, kInf) : q;
  return r > 0.0 ? std::nextafter(q, kInf) : q;
}

double sqrt_down(double a) {
  double s = std::sqrt(a);
  double r = std::fma(s, s, -a);  // s*s - a, exact
  return r > 0.0 ? std::nextafter(s, -kInf) : s;
}

double sqrt_up(double a) {
  double s = std::sqrt(a);
  double r = std::fma(s, s, -a);
  return r < 0.0 ? std::nextafter(s, kInf) : s;
}

}  // namespace rounding

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo_) || std::isnan(hi_))
    throw std::invalid_argument("Interval endpoint is NaN");
  if (!std::isfinite(lo_) || !std::isfinite(hi_))
    throw std::invalid_argument("Interval endpoint is infinite");
  if (lo_ > hi_) throw std::invalid_argument("Interval endpoints out of order");
  if (lo_ == 0.0) lo_ = 0.0;  // normalize -0
  if (hi_ == 0.0) hi_ = 0.0;
}

double Interval::mid() const {
  double m = lo_ + 0.5 * (hi_ - lo_);
  return std::clamp(m, lo_, hi_);
}

Interval Interval::rational(long long num, long long den) {
  return Interval(rounding::div_down(static_cast<double>(num), static_cast<double>(den)),
                  rounding::div_up(static_cast<double>(num), static_cast<double>(den)));
}

Interval Interval::over_sqrt(long long num, long long k) {
  double n = static_cast<double>(num);
  double sd = rounding::sqrt_down(static_cast<double>(k));
  double su = rounding::sqrt_up(static_cast<double>(k));
  if (num >= 0) return Interval(rounding::div_down(n, su), rounding::div_up(n, sd));
  return Interval(rounding::div_down(n, sd), rounding::div_up(n, su));
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(rounding::add_down(a.lo_, b.lo_), rounding::add_up(a.hi_, b.hi_));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(rounding::add_down(a.lo_, -b.hi_), rounding::add_up(a.hi_, -b.lo_));
}

Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

Interval operator*(const Interval& a, const Interval& b) {
  using namespace rounding;
  double lo = std::min({mul_down(a.lo_, b.lo_), mul_down(a.lo_, b.hi_),
                        mul_down(a.hi_, b.lo_), mul_down(a.hi_, b.hi_)});
  double hi = std::max({mul_up(a.lo_, b.lo_), mul_up(a.lo_, b.hi_),
                        mul_up(a.hi_, b.lo_), mul_up(a.hi_, b.hi_)});
  return Interval(lo, hi);
}

Interval sqrt_clamped(const Interval& a, double eps) {
  if (a.hi() < -eps) throw DomainError("radicand negative beyond tolerance");
  double lo = a.lo() <= 0.0 ? 0.0 : rounding::sqrt_down(a.lo());
  double hi = a.hi() <= 0.0 ? 0.0 : rounding::sqrt_up(a.hi());
  return Interval(lo, hi);
}

namespace {

double cube_down(double t) {
  using namespace rounding;
  return t >= 0.0 ? mul_down(mul_down(t, t), t) : mul_down(mul_up(t, t), t);
}

double cube_up(double t) {
  using namespace rounding;
  return t >= 0.0 ? mul_up(mul_up(t, t), t) : mul_up(mul_down(t, t), t);
}

}  // namespace

Interval pow_int(const Interval& a, int n) {
  using namespace rounding;
  switch (n) {
    case 2:
      if (a.lo() >= 0.0) return Interval(mul_down(a.lo(), a.lo()), mul_up(a.hi(), a.hi()));
      if (a.hi() <= 0.0) return Interval(mul_down(a.hi(), a.hi()), mul_up(a.lo(), a.lo()));
      return Interval(0.0, std::max(mul_up(a.lo(), a.lo()), mul_up(a.hi(), a.hi())));
    case 3:
      return Interval(cube_down(a.lo()), cube_up(a.hi()));
    case 4: {
      Interval sq = pow_int(a, 2);
      return Interval(mul_down(sq.lo(), sq.lo()), mul_up(sq.hi(), sq.hi()));
    }
    default:
      throw std::invalid_argument("pow_int exponent must be 2, 3 or 4");
  }
}

Interval recip_pos(const Interval& a) {
  if (a.lo() <= 0.0) throw DomainError("recip_pos requires a strictly positive interval");
  return Interval(rounding::div_down(1.0, a.hi()), rounding::div_up(1.0, a.lo()));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

}  // namespace certbounds
