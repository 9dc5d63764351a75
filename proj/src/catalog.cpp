#include "certbounds/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace certbounds {

namespace {

Expr cint(long long v) { return Expr::constant(static_cast<double>(v)); }

Expr crat(long long num, long long den) {
  return Expr::constant(static_cast<double>(num) / static_cast<double>(den),
                        Interval::rational(num, den));
}

Expr csqr(long long num, long long k) {
  return Expr::constant(static_cast<double>(num) / std::sqrt(static_cast<double>(k)),
                        Interval::over_sqrt(num, k));
}

Box box1(double lo, double hi) { return Box{Interval(lo, hi)}; }

// 1 - 3y^2, the radicand shared by the a2 = 0 bound functions.
Expr odd_radicand() {
  Expr y = Expr::var(0);
  return cint(1) - cint(3) * pow(y, 2);
}

// 1 - x^2 - (27/4)x^4, the radicand shared by the a3 = 0 bound functions.
Expr a3zero_radicand() {
  Expr x = Expr::var(0);
  return cint(1) - pow(x, 2) - crat(27, 4) * pow(x, 4);
}

Interval closed_form_f2() {
  // (1/4) sqrt(21/5) + 5/8
  return sqrt_clamped(Interval::rational(21, 5), 0.0) * Interval::rational(1, 4) +
         Interval::rational(5, 8);
}

std::vector<BoundProblem> build_catalog() {
  std::vector<BoundProblem> entries;
  Expr x = Expr::var(0);
  Expr y = Expr::var(0);

  {
    BoundProblem p;
    p.id = "f1";
    p.arity = 1;
    Expr rad = odd_radicand();
    p.objective = cint(2) * pow(y, 3) + crat(4, 5) * rad + csqr(4, 7) * y * sqrt_guarded(rad);
    p.domain.box = box1(0.0, 0.5);
    p.expected_value = 1.026;
    p.expected_argmax = {0.286667};
    p.value_tolerance = 5e-4;
    p.argmax_tolerance = 1e-4;
    p.enclosure_tolerance = 1e-9;
    p.note = "majorant of |H3(1)| when a2 = 0";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "a5_a2zero";
    p.arity = 1;
    p.objective = csqr(2, 7) * sqrt_guarded(odd_radicand()) + cint(3) * pow(y, 2);
    p.domain.box = box1(0.0, 0.5);
    p.closed_form = Interval::rational(3, 4) + Interval::over_sqrt(1, 7);
    p.expected_value = 0.75 + 1.0 / std::sqrt(7.0);
    p.expected_argmax = {0.5};
    p.value_tolerance = 1e-12;
    p.argmax_tolerance = 1e-6;
    p.enclosure_tolerance = 1e-13;
    p.note = "majorant of |a5| when a2 = 0; closed form 3/4 + 1/sqrt(7)";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "f2";
    p.arity = 1;
    p.objective = csqr(2, 5) * sqrt_guarded(a3zero_radicand()) + cint(5) * pow(x, 3);
    p.domain.box = box1(0.0, 0.5);
    p.closed_form = closed_form_f2();
    p.expected_value = 0.25 * std::sqrt(21.0 / 5.0) + 0.625;
    p.expected_argmax = {0.5};
    p.value_tolerance = 1e-12;
    p.argmax_tolerance = 1e-6;
    p.enclosure_tolerance = 1e-13;
    p.note = "majorant of |a4| when a3 = 0; closed form (1/4)sqrt(21/5) + 5/8";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "f3";
    p.arity = 1;
    p.objective = (csqr(2, 7) + csqr(6, 5) * x) * sqrt_guarded(a3zero_radicand()) +
                  crat(25, 4) * pow(x, 4);
    p.domain.box = box1(0.0, 0.5);
    p.expected_value = 1.674896577;
    p.expected_argmax = {0.43957885};
    p.value_tolerance = 1e-9;
    p.argmax_tolerance = 1e-6;
    p.enclosure_tolerance = 1e-10;
    p.note = "majorant of |a5| when a3 = 0";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "f4";
    p.arity = 1;
    p.objective = csqr(4, 5) * x * sqrt_guarded(a3zero_radicand()) + cint(10) * pow(x, 4);
    p.domain.box = box1(0.0, 0.5);
    p.closed_form = closed_form_f2();
    p.expected_value = 0.25 * std::sqrt(21.0 / 5.0) + 0.625;
    p.expected_argmax = {0.5};
    p.value_tolerance = 1e-12;
    p.argmax_tolerance = 1e-6;
    p.enclosure_tolerance = 1e-13;
    p.note = "majorant of |H2(2)| when a3 = 0; same endpoint value as f2";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "f5";
    p.arity = 1;
    Expr rad = a3zero_radicand();
    p.objective = crat(1, 5) * rad +
                  (csqr(4, 5) * pow(x, 3) + csqr(8, 7) * pow(x, 2)) * sqrt_guarded(rad);
    p.domain.box = box1(0.0, 0.5);
    p.expected_value = 0.6647958756;
    p.expected_argmax = {0.458573};
    p.value_tolerance = 1e-9;
    p.argmax_tolerance = 1e-5;
    p.enclosure_tolerance = 5e-13;
    p.note = "majorant of |H3(1)| when a3 = 0 (as printed; see h3_a3zero_reduced)";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "f6";
    p.arity = 2;
    Expr x2 = Expr::var(0);
    Expr y2 = Expr::var(1);
    Expr g = cint(1) - pow(x2, 2) - cint(3) * pow(y2, 2);
    p.objective = csqr(2, 5) * sqrt_guarded(g) + cint(4) * x2 * y2 + pow(x2, 3);
    p.domain.box = Box{Interval(0.0, 1.0), Interval(0.0, Interval::over_sqrt(1, 3).hi())};
    p.domain.constraint = g;
    p.domain.project_feasible = [](const std::vector<double>& pt) {
      Interval cap = sqrt_clamped(
          (Interval::point(1.0) - pow_int(Interval::point(pt[0]), 2)) * Interval::rational(1, 3),
          0.0);
      return std::vector<double>{pt[0], std::min(pt[1], cap.lo())};
    };
    p.expected_value = 1.75185;
    p.expected_argmax = {0.83634, 0.2872};
    p.value_tolerance = 1e-4;
    p.argmax_tolerance = 1e-3;
    p.enclosure_tolerance = 1e-9;
    p.note = "majorant of |a4| - |a3| over the Grunsky modulus region";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "a5_minus_a3_odd";
    p.arity = 1;
    p.objective = csqr(2, 7) * sqrt_guarded(odd_radicand()) + pow(y, 2);
    p.domain.box = box1(0.0, 0.5);
    p.closed_form = Interval::over_sqrt(2, 7);
    p.expected_value = 2.0 / std::sqrt(7.0);
    p.expected_argmax = {0.0};
    p.value_tolerance = 1e-12;
    p.argmax_tolerance = 1e-6;
    p.enclosure_tolerance = 1e-13;
    p.note = "majorant of |a5| - |a3| for odd functions; closed form 2/sqrt(7)";
    entries.push_back(std::move(p));
  }
  return entries;
}

std::vector<BoundProblem> build_edges() {
  std::vector<BoundProblem> entries;
  Expr x = Expr::var(0);
  Expr y = Expr::var(0);
  double y_top = Interval::over_sqrt(1, 3).hi();

  {
    BoundProblem p;
    p.id = "f6_edge_0";
    p.arity = 1;
    p.objective = csqr(2, 5) * sqrt_guarded(cint(1) - cint(3) * pow(y, 2));
    p.domain.box = box1(0.0, y_top);
    p.closed_form = Interval::over_sqrt(2, 5);
    p.expected_value = 2.0 / std::sqrt(5.0);
    p.expected_argmax = {0.0};
    p.value_tolerance = 1e-12;
    p.argmax_tolerance = 1e-6;
    p.enclosure_tolerance = 1e-13;
    p.note = "f6 restricted to the edge x = 0; closed form 2/sqrt(5)";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "f6_edge_y0";
    p.arity = 1;
    p.objective = csqr(2, 5) * sqrt_guarded(cint(1) - pow(x, 2)) + pow(x, 3);
    p.domain.box = box1(0.0, 1.0);
    p.expected_value = 1.13666;
    p.expected_argmax = {0.9494};
    p.value_tolerance = 5e-4;
    p.argmax_tolerance = 5e-4;
    p.enclosure_tolerance = 1e-9;
    p.note = "f6 restricted to the edge y = 0";
    entries.push_back(std::move(p));
  }
  {
    BoundProblem p;
    p.id = "f6_edge_curve";
    p.arity = 1;
    p.objective = csqr(4, 3) * x * sqrt_guarded(cint(1) - pow(x, 2)) + pow(x, 3);
    p.domain.box = box1(0.0, 1.0);
    p.expected_value = 1.6496;
    p.expected_argmax = {0.8628};
    p.value_tolerance = 5e-4;
    p.argmax_tolerance = 5e-4;
    p.enclosure_tolerance = 1e-9;
    p.note = "f6 restricted to the curved edge y = sqrt(1 - x^2)/sqrt(3)";
    entries.push_back(std::move(p));
  }
  return entries;
}

void register_check(const BoundProblem& p) {
  if (static_cast<int>(p.domain.box.size()) != p.arity)
    throw std::logic_error(p.id + ": domain box arity mismatch");
  if (static_cast<int>(p.expected_argmax.size()) != p.arity)
    throw std::logic_error(p.id + ": expected argmax arity mismatch");
  for (int i = 0; i < p.arity; ++i) {
    if (!p.domain.box[i].contains(p.expected_argmax[i]))
      throw std::logic_error(p.id + ": expected argmax outside the domain box");
  }
  if (p.domain.constraint) {
    double g = p.domain.constraint->eval_point(p.expected_argmax);
    if (g < 0.0) throw std::logic_error(p.id + ": expected argmax infeasible");
  }
  double at_argmax = p.objective.eval_point(p.expected_argmax);
  if (std::abs(at_argmax - p.expected_value) > p.value_tolerance)
    throw std::logic_error(p.id + ": objective at expected argmax misses the expected value");
  for (const Interval& arg : p.objective.sqrt_argument_ranges(p.domain.box)) {
    if (arg.hi() < -kRadicandEps)
      throw std::logic_error(p.id + ": radicand negative over the whole domain");
  }
  if (p.closed_form && std::abs(p.closed_form->mid() - p.expected_value) > p.value_tolerance)
    throw std::logic_error(p.id + ": closed form disagrees with expected value");
}

std::vector<BoundProblem> checked(std::vector<BoundProblem> entries) {
  for (const BoundProblem& p : entries) register_check(p);
  return entries;
}

}  // namespace

const std::vector<BoundProblem>& catalog() {
  static const std::vector<BoundProblem> entries = checked(build_catalog());
  return entries;
}

const std::vector<BoundProblem>& f6_edge_curves() {
  static const std::vector<BoundProblem> entries = checked(build_edges());
  return entries;
}

const std::vector<BoundProblem>& all_bounds() {
  static const std::vector<BoundProblem> entries = [] {
    std::vector<BoundProblem> all = catalog();
    const auto& edges = f6_edge_curves();
    all.insert(all.end(), edges.begin(), edges.end());
    return all;
  }();
  return entries;
}

const BoundProblem* find_bound(const std::string& id) {
  for (const BoundProblem& p : all_bounds())
    if (p.id == id) return &p;
  return nullptr;
}

}  // namespace certbounds
