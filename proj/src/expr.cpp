#include "certbounds/expr.hpp"

#include <cmath>
#include <stdexcept>

namespace certbounds {

Expr::Expr() {
  Node n;
  n.kind = Kind::kConstant;
  nodes_.push_back(n);
  root_ = 0;
  arity_ = 0;
}

Expr Expr::constant(double value) { return constant(value, Interval::point(value)); }

Expr Expr::constant(double rep, const Interval& enclosure) {
  if (!enclosure.contains(rep)) throw std::invalid_argument("constant representative outside enclosure");
  Expr e;
  e.nodes_.clear();
  Node n;
  n.kind = Kind::kConstant;
  n.rep = rep;
  n.enclosure = enclosure;
  e.nodes_.push_back(n);
  e.root_ = 0;
  e.arity_ = 0;
  return e;
}

Expr Expr::var(int index) {
  if (index < 0 || index > 1) throw std::invalid_argument("variable index must be 0 or 1");
  Expr e;
  e.nodes_.clear();
  Node n;
  n.kind = Kind::kVariable;
  n.var = index;
  e.nodes_.push_back(n);
  e.root_ = 0;
  e.arity_ = index + 1;
  return e;
}

Expr Expr::combine(Kind kind, const Expr& x, const Expr& y) {
  Expr e;
  e.nodes_.clear();
  e.nodes_.reserve(x.nodes_.size() + y.nodes_.size() + 1);
  e.nodes_.insert(e.nodes_.end(), x.nodes_.begin(), x.nodes_.end());
  std::int32_t offset = static_cast<std::int32_t>(x.nodes_.size());
  for (Node n : y.nodes_) {
    if (n.a >= 0) n.a += offset;
    if (n.b >= 0) n.b += offset;
    e.nodes_.push_back(n);
  }
  Node n;
  n.kind = kind;
  n.a = x.root_;
  n.b = offset + y.root_;
  e.nodes_.push_back(n);
  e.root_ = static_cast<std::int32_t>(e.nodes_.size()) - 1;
  e.arity_ = std::max(x.arity_, y.arity_);
  return e;
}

Expr Expr::unary(Kind kind, const Expr& x) {
  Expr e = x;
  Node n;
  n.kind = kind;
  n.a = e.root_;
  e.nodes_.push_back(n);
  e.root_ = static_cast<std::int32_t>(e.nodes_.size()) - 1;
  return e;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::combine(Expr::Kind::kAdd, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::combine(Expr::Kind::kSub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::combine(Expr::Kind::kMul, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Expr::Kind::kNeg, a); }

Expr pow(const Expr& a, int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("pow exponent must be 2, 3 or 4");
  Expr e = Expr::unary(Expr::Kind::kPow, a);
  e.nodes_.back().exponent = n;
  return e;
}

Expr sqrt_guarded(const Expr& a) {
  Expr e = Expr::unary(Expr::Kind::kSqrt, a);
  e.nodes_.back().guarded = true;
  return e;
}

namespace {

double pow_small(double v, int n) {
  if (n == 1) return v;
  double sq = v * v;
  switch (n) {
    case 2: return sq;
    case 3: return sq * v;
    default: return sq * sq;
  }
}

struct PointOps {
  using V = double;
  static V constant(double rep, const Interval&) { return rep; }
  static V add(V a, V b) { return a + b; }
  static V sub(V a, V b) { return a - b; }
  static V mul(V a, V b) { return a * b; }
  static V neg(V a) { return -a; }
  static V pow_node(V a, int n) { return pow_small(a, n); }
  static V sqrt_node(V a, double eps) {
    if (a < -eps) throw DomainError("radicand negative beyond tolerance");
    return std::sqrt(a < 0.0 ? 0.0 : a);
  }
};

struct IntervalOps {
  using V = Interval;
  static V constant(double, const Interval& enc) { return enc; }
  static V add(const V& a, const V& b) { return a + b; }
  static V sub(const V& a, const V& b) { return a - b; }
  static V mul(const V& a, const V& b) { return a * b; }
  static V neg(const V& a) { return -a; }
  static V pow_node(const V& a, int n) { return pow_int(a, n); }
  static V sqrt_node(const V& a, double eps) { return sqrt_clamped(a, eps); }
};

struct DualPointOps {
  using V = Dual<double>;
  static V constant(double rep, const Interval&) { return {rep, 0.0}; }
  static V add(const V& a, const V& b) { return {a.v + b.v, a.d + b.d}; }
  static V sub(const V& a, const V& b) { return {a.v - b.v, a.d - b.d}; }
  static V mul(const V& a, const V& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
  static V neg(const V& a) { return {-a.v, -a.d}; }
  static V pow_node(const V& a, int n) {
    return {pow_small(a.v, n), n * pow_small(a.v, n - 1) * a.d};
  }
  static V sqrt_node(const V& a, double) {
    if (a.v <= 0.0) throw DomainError("sqrt derivative singular at radicand zero");
    double s = std::sqrt(a.v);
    return {s, a.d / (2.0 * s)};
  }
};

struct DualIntervalOps {
  using V = Dual<Interval>;
  static V constant(double, const Interval& enc) { return {enc, Interval()}; }
  static V add(const V& a, const V& b) { return {a.v + b.v, a.d + b.d}; }
  static V sub(const V& a, const V& b) { return {a.v - b.v, a.d - b.d}; }
  static V mul(const V& a, const V& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
  static V neg(const V& a) { return {-a.v, -a.d}; }
  static V pow_node(const V& a, int n) {
    Interval back = n == 2 ? a.v : pow_int(a.v, n - 1);
    return {pow_int(a.v, n), Interval::point(n) * back * a.d};
  }
  static V sqrt_node(const V& a, double eps) {
    if (a.v.lo() <= 0.0) throw DomainError("sqrt derivative singular at radicand zero");
    Interval s = sqrt_clamped(a.v, eps);
    return {s, a.d * recip_pos(Interval::point(2.0) * s)};
  }
};

}  // namespace

template <class Ops>
typename Ops::V Expr::eval_impl(std::span<const typename Ops::V> vars) const {
  std::vector<typename Ops::V> vals(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Kind::kConstant: vals[i] = Ops::constant(n.rep, n.enclosure); break;
      case Kind::kVariable: vals[i] = vars[n.var]; break;
      case Kind::kAdd: vals[i] = Ops::add(vals[n.a], vals[n.b]); break;
      case Kind::kSub: vals[i] = Ops::sub(vals[n.a], vals[n.b]); break;
      case Kind::kMul: vals[i] = Ops::mul(vals[n.a], vals[n.b]); break;
      case Kind::kNeg: vals[i] = Ops::neg(vals[n.a]); break;
      case Kind::kPow: vals[i] = Ops::pow_node(vals[n.a], n.exponent); break;
      case Kind::kSqrt: vals[i] = Ops::sqrt_node(vals[n.a], n.guarded ? kRadicandEps : 0.0); break;
    }
  }
  return vals[root_];
}

void Expr::check_arity(std::size_t given) const {
  if (static_cast<int>(given) < arity_)
    throw std::invalid_argument("evaluation point has fewer coordinates than the expression arity");
}

double Expr::eval_point(std::span<const double> p) const {
  check_arity(p.size());
  return eval_impl<PointOps>(p);
}

Interval Expr::eval_interval(const Box& b) const {
  check_arity(b.size());
  return eval_impl<IntervalOps>(std::span<const Interval>(b));
}

double Expr::eval_derivative(std::span<const double> p, int var) const {
  check_arity(p.size());
  std::vector<Dual<double>> vars(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    vars[i] = {p[i], static_cast<int>(i) == var ? 1.0 : 0.0};
  return eval_impl<DualPointOps>(std::span<const Dual<double>>(vars)).d;
}

Interval Expr::eval_derivative_interval(const Box& b, int var) const {
  check_arity(b.size());
  std::vector<Dual<Interval>> vars(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    vars[i] = {b[i], static_cast<int>(i) == var ? Interval::point(1.0) : Interval()};
  return eval_impl<DualIntervalOps>(std::span<const Dual<Interval>>(vars)).d;
}

std::vector<Interval> Expr::sqrt_argument_ranges(const Box& b) const {
  check_arity(b.size());
  std::vector<Interval> vals(nodes_.size());
  std::vector<Interval> args;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Kind::kConstant: vals[i] = n.enclosure; break;
      case Kind::kVariable: vals[i] = b[n.var]; break;
      case Kind::kAdd: vals[i] = vals[n.a] + vals[n.b]; break;
      case Kind::kSub: vals[i] = vals[n.a] - vals[n.b]; break;
      case Kind::kMul: vals[i] = vals[n.a] * vals[n.b]; break;
      case Kind::kNeg: vals[i] = -vals[n.a]; break;
      case Kind::kPow: vals[i] = pow_int(vals[n.a], n.exponent); break;
      case Kind::kSqrt:
        args.push_back(vals[n.a]);
        vals[i] = sqrt_clamped(vals[n.a], n.guarded ? kRadicandEps : 0.0);
        break;
    }
  }
  return args;
}

}  // namespace certbounds
