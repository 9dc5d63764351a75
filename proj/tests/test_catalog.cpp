#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "certbounds/catalog.hpp"

using namespace certbounds;

namespace {

// Hand-written long-double forms of every catalog function, kept fully
// independent of the expression machinery so transcription errors in
// either place show up as disagreement.
long double a3rad(long double x) { return 1.0L - x * x - 6.75L * x * x * x * x; }

const std::map<std::string, std::function<long double(long double, long double)>>&
reference_forms() {
  static const std::map<std::string, std::function<long double(long double, long double)>> m = {
      {"f1",
       [](long double y, long double) {
         return 2.0L * y * y * y + 0.8L * (1.0L - 3.0L * y * y) +
                4.0L / sqrtl(7.0L) * y * sqrtl(1.0L - 3.0L * y * y);
       }},
      {"a5_a2zero",
       [](long double y, long double) {
         return 2.0L / sqrtl(7.0L) * sqrtl(1.0L - 3.0L * y * y) + 3.0L * y * y;
       }},
      {"f2",
       [](long double x, long double) {
         return 2.0L / sqrtl(5.0L) * sqrtl(a3rad(x)) + 5.0L * x * x * x;
       }},
      {"f3",
       [](long double x, long double) {
         return (2.0L / sqrtl(7.0L) + 6.0L / sqrtl(5.0L) * x) * sqrtl(a3rad(x)) +
                6.25L * x * x * x * x;
       }},
      {"f4",
       [](long double x, long double) {
         return 4.0L / sqrtl(5.0L) * x * sqrtl(a3rad(x)) + 10.0L * x * x * x * x;
       }},
      {"f5",
       [](long double x, long double) {
         return 0.2L * a3rad(x) +
                (4.0L / sqrtl(5.0L) * x * x * x + 8.0L / sqrtl(7.0L) * x * x) *
                    sqrtl(a3rad(x));
       }},
      {"f6",
       [](long double x, long double y) {
         return 2.0L / sqrtl(5.0L) * sqrtl(1.0L - x * x - 3.0L * y * y) + 4.0L * x * y +
                x * x * x;
       }},
      {"a5_minus_a3_odd",
       [](long double y, long double) {
         return 2.0L / sqrtl(7.0L) * sqrtl(1.0L - 3.0L * y * y) + y * y;
       }},
      {"f6_edge_0",
       [](long double y, long double) {
         return 2.0L / sqrtl(5.0L) * sqrtl(1.0L - 3.0L * y * y);
       }},
      {"f6_edge_y0",
       [](long double x, long double) {
         return 2.0L / sqrtl(5.0L) * sqrtl(1.0L - x * x) + x * x * x;
       }},
      {"f6_edge_curve",
       [](long double x, long double) {
         return 4.0L / sqrtl(3.0L) * x * sqrtl(1.0L - x * x) + x * x * x;
       }},
  };
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("catalog");

TEST_CASE("registry size and vocabulary") {
  CHECK(catalog().size() == 8);
  CHECK(f6_edge_curves().size() == 3);
  CHECK(all_bounds().size() == 11);
  for (const char* id : {"f1", "a5_a2zero", "f2", "f3", "f4", "f5", "f6", "a5_minus_a3_odd",
                         "f6_edge_0", "f6_edge_y0", "f6_edge_curve"})
    CHECK(find_bound(id) != nullptr);
  CHECK(find_bound("nosuch") == nullptr);
}

TEST_CASE("registration self-checks hold for every entry") {
  for (const BoundProblem& p : all_bounds()) {
    CAPTURE(p.id);
    CHECK(static_cast<int>(p.domain.box.size()) == p.arity);
    double v = p.objective.eval_point(p.expected_argmax);
    CHECK(std::abs(v - p.expected_value) <= p.value_tolerance);
    for (int i = 0; i < p.arity; ++i) CHECK(p.domain.box[i].contains(p.expected_argmax[i]));
  }
}

TEST_CASE("f2 at the endpoint equals the closed form") {
  const BoundProblem* f2 = find_bound("f2");
  double closed = 0.25 * std::sqrt(21.0 / 5.0) + 0.625;
  CHECK(f2->objective.eval_point(std::vector<double>{0.5}) ==
        doctest::Approx(closed).epsilon(1e-15));
  CHECK(f2->closed_form.has_value());
  CHECK(f2->closed_form->contains(closed));

  const BoundProblem* f4 = find_bound("f4");
  CHECK(f4->objective.eval_point(std::vector<double>{0.5}) ==
        doctest::Approx(closed).epsilon(1e-15));
}

TEST_CASE("odd-function entry: the endpoint away from the maximum is dominated") {
  const BoundProblem* h = find_bound("a5_minus_a3_odd");
  double at_half = h->objective.eval_point(std::vector<double>{0.5});
  CHECK(at_half == doctest::Approx(0.6279644730092272).epsilon(1e-14));  // 1/sqrt(7) + 1/4
  CHECK(at_half < h->expected_value);
  CHECK(h->expected_value == doctest::Approx(0.7559289460184544).epsilon(1e-14));
}

TEST_CASE("f6 domain: constraint and projection agree") {
  const BoundProblem* f6 = find_bound("f6");
  REQUIRE(f6->domain.constraint.has_value());
  REQUIRE(f6->domain.project_feasible != nullptr);
  // the projection of any box point is feasible for the true constraint
  for (double x : {0.0, 0.3, 0.7, 0.99, 1.0}) {
    for (double y : {0.0, 0.2, 0.4, 0.5773502691896258}) {
      std::vector<double> pr = f6->domain.project_feasible(std::vector<double>{x, y});
      CHECK(pr[0] == x);
      CHECK(pr[1] <= y);
      // exact feasibility: 3 pr[1]^2 <= 1 - x^2 in extended precision
      long double slack =
          1.0L - static_cast<long double>(x) * x - 3.0L * static_cast<long double>(pr[1]) * pr[1];
      CHECK(slack >= 0.0L);
    }
  }
}

TEST_CASE("expressions agree with independently hand-written forms") {
  std::mt19937_64 rng(101);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (const BoundProblem& p : all_bounds()) {
    CAPTURE(p.id);
    const auto& ref = reference_forms().at(p.id);
    int checked = 0;
    while (checked < 2000) {
      std::vector<double> pt(p.arity);
      for (int i = 0; i < p.arity; ++i) {
        double lo = p.domain.box[i].lo(), hi = p.domain.box[i].hi();
        pt[i] = lo + unit() * (hi - lo) * 0.999;
      }
      if (p.domain.constraint && p.domain.constraint->eval_point(pt) < 1e-6) continue;
      ++checked;
      double got = p.objective.eval_point(pt);
      long double want = ref(pt[0], p.arity == 2 ? pt[1] : 0.0L);
      CHECK(std::abs(got - static_cast<double>(want)) <= 1e-14 * std::max(1.0, std::abs(got)));
    }
  }
}

TEST_CASE("radicand ranges admissible over each domain") {
  for (const BoundProblem& p : all_bounds()) {
    CAPTURE(p.id);
    for (const Interval& arg : p.objective.sqrt_argument_ranges(p.domain.box))
      CHECK(arg.hi() >= -kRadicandEps);
  }
}

TEST_SUITE_END();
