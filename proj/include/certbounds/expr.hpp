#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "certbounds/dual.hpp"
#include "certbounds/interval.hpp"

namespace certbounds {

/// Tolerance under which a guarded radicand may dip negative through
/// rounding without being treated as a domain violation.
inline constexpr double kRadicandEps = 1e-12;

/// Immutable closed-form expression over one or two variables (index 0 = x,
/// index 1 = y). One tree serves three evaluation modes: IEEE point values,
/// certified interval enclosures, and forward-mode first derivatives.
class Expr {
 public:
  Expr();  // the zero constant

  /// Constant whose double representation is exact (integers, quarters, ...).
  static Expr constant(double value);
  /// Constant given by a representative double plus a certified enclosure of
  /// the true real value; interval evaluation uses the enclosure.
  static Expr constant(double rep, const Interval& enclosure);
  static Expr var(int index);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& a, int n);  // n in 2..4
  /// Square root whose argument is a guarded radicand: interval evaluation
  /// clamps rounding-level negative dips at zero.
  friend Expr sqrt_guarded(const Expr& a);

  int arity() const { return arity_; }
  std::size_t node_count() const { return nodes_.size(); }

  double eval_point(std::span<const double> p) const;
  Interval eval_interval(const Box& b) const;
  /// Exact forward-mode derivative at p with respect to variable var.
  /// Throws DomainError when a radicand is not strictly positive.
  double eval_derivative(std::span<const double> p, int var) const;
  /// Certified enclosure of the partial derivative over a box.
  Interval eval_derivative_interval(const Box& b, int var) const;

  /// Interval ranges of every sqrt argument over a box; used at catalog
  /// registration to validate radicand domains.
  std::vector<Interval> sqrt_argument_ranges(const Box& b) const;

 private:
  enum class Kind : std::uint8_t { kConstant, kVariable, kAdd, kSub, kMul, kNeg, kPow, kSqrt };

  struct Node {
    Kind kind{};
    std::int32_t a = -1;
    std::int32_t b = -1;
    std::int32_t var = 0;
    std::int32_t exponent = 0;
    bool guarded = false;
    double rep = 0.0;
    Interval enclosure;
  };

  static Expr combine(Kind kind, const Expr& x, const Expr& y);
  static Expr unary(Kind kind, const Expr& x);

  template <class Ops>
  typename Ops::V eval_impl(std::span<const typename Ops::V> vars) const;

  void check_arity(std::size_t given) const;

  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  int arity_ = 0;
};

}  // namespace certbounds
