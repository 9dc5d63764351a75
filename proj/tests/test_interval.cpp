#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "certbounds/interval.hpp"

using namespace certbounds;

namespace {

double next_in(std::mt19937_64& rng, double lo, double hi) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

Interval random_interval(std::mt19937_64& rng) {
  double a = next_in(rng, -10.0, 10.0);
  double b = next_in(rng, -10.0, 10.0);
  return Interval(std::min(a, b), std::max(a, b));
}

double ulp(double v) { return std::nextafter(std::abs(v), 1e300) - std::abs(v); }

}  // namespace

TEST_SUITE_BEGIN("interval");

TEST_CASE("construction validates endpoints") {
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(std::nan(""), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  Interval p = Interval::point(3.5);
  CHECK(p.lo() == 3.5);
  CHECK(p.hi() == 3.5);
}

TEST_CASE("exact endpoint arithmetic stays exact") {
  Interval s = Interval(1, 2) + Interval(3, 4);
  CHECK(s.lo() == 4.0);
  CHECK(s.hi() == 6.0);

  Interval m = Interval(-1, 1) * Interval(-1, 1);
  CHECK(m.lo() == -1.0);
  CHECK(m.hi() == 1.0);

  Interval z = Interval(0, 0) + Interval(-2.5, 7.25);
  CHECK(z.lo() == -2.5);
  CHECK(z.hi() == 7.25);
}

TEST_CASE("sqrt_clamped examples") {
  Interval a = sqrt_clamped(Interval(0.25, 1.0), 1e-12);
  CHECK(a.lo() == 0.5);
  CHECK(a.hi() == 1.0);

  Interval b = sqrt_clamped(Interval(-1e-18, 4.0), 1e-12);
  CHECK(b.lo() == 0.0);
  CHECK(b.hi() >= 2.0);
  CHECK(b.hi() <= 2.0 + ulp(2.0));

  CHECK_THROWS_AS(sqrt_clamped(Interval(-1.0, -0.5), 1e-12), DomainError);
}

TEST_CASE("pow_int examples") {
  Interval even = pow_int(Interval(-2.0, 1.0), 2);
  CHECK(even.lo() == 0.0);
  CHECK(even.hi() == 4.0);

  Interval cube = pow_int(Interval(0.5, 0.5), 3);
  CHECK(cube.contains(0.125));
  CHECK(cube.width() <= ulp(0.125));

  Interval fourth = pow_int(Interval(1.0, 2.0), 4);
  CHECK(fourth.lo() == 1.0);
  CHECK(fourth.hi() == 16.0);
}

TEST_CASE("recip_pos encloses the reciprocal and rejects zero") {
  Interval r = recip_pos(Interval(0.5, 4.0));
  CHECK(r.lo() <= 0.25);
  CHECK(r.hi() >= 2.0);
  CHECK(r.width() <= 1.75 + 1e-15);
  CHECK_THROWS_AS(recip_pos(Interval(0.0, 1.0)), DomainError);
}

TEST_CASE("containment: random point results lie inside interval results") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100000; ++i) {
    Interval a = random_interval(rng);
    Interval b = random_interval(rng);
    double x = next_in(rng, a.lo(), a.hi());
    double y = next_in(rng, b.lo(), b.hi());

    CHECK((a + b).contains(x + y));
    CHECK((a - b).contains(x - y));
    CHECK((a * b).contains(x * y));
    CHECK((-a).contains(-x));

    int n = 2 + static_cast<int>(rng() % 3);
    double pn = n == 2 ? x * x : (n == 3 ? x * x * x : (x * x) * (x * x));
    CHECK(pow_int(a, n).contains(pn));

    if (a.lo() > 0.0) {
      CHECK(sqrt_clamped(a, 0.0).contains(std::sqrt(x)));
      CHECK(recip_pos(a).contains(1.0 / x));
    }
  }
}

TEST_CASE("inclusion monotonicity on nested operands") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20000; ++i) {
    Interval a2 = random_interval(rng);
    Interval b2 = random_interval(rng);
    // shrink each toward its midpoint to build a ⊆ a2, b ⊆ b2
    double sa = next_in(rng, 0.0, 1.0), sb = next_in(rng, 0.0, 1.0);
    Interval a(a2.lo() + sa * (a2.mid() - a2.lo()), a2.hi() - sa * (a2.hi() - a2.mid()));
    Interval b(b2.lo() + sb * (b2.mid() - b2.lo()), b2.hi() - sb * (b2.hi() - b2.mid()));

    CHECK((a2 + b2).contains(a + b));
    CHECK((a2 - b2).contains(a - b));
    CHECK((a2 * b2).contains(a * b));
    CHECK(pow_int(a2, 3).contains(pow_int(a, 3)));
    if (a2.lo() > 0.0) CHECK(sqrt_clamped(a2, 0.0).contains(sqrt_clamped(a, 0.0)));
  }
}

TEST_CASE("width convergence as the operand shrinks") {
  std::mt19937_64 rng(11);
  const double deltas[3] = {1e-3, 1e-6, 1e-9};
  for (int i = 0; i < 100; ++i) {
    double x = next_in(rng, 0.1, 3.0);
    double y = next_in(rng, 0.1, 3.0);
    double prev_add = -1.0, prev_mul = -1.0, prev_sqrt = -1.0, prev_pow = -1.0;
    bool first = true;
    for (double d : deltas) {
      Interval a(x - d, x + d);
      Interval b(y - d, y + d);
      double w_add = (a + b).width();
      double w_mul = (a * b).width();
      double w_sqrt = sqrt_clamped(a, 0.0).width();
      double w_pow = pow_int(a, 3).width();
      if (!first) {
        CHECK(w_add < prev_add);
        CHECK(w_mul < prev_mul);
        CHECK(w_sqrt < prev_sqrt);
        CHECK(w_pow < prev_pow);
      }
      prev_add = w_add;
      prev_mul = w_mul;
      prev_sqrt = w_sqrt;
      prev_pow = w_pow;
      first = false;
    }
  }
}

TEST_CASE("certified rational and inverse-sqrt constants") {
  Interval r = Interval::rational(4, 5);
  CHECK(r.lo() <= 0.8);
  CHECK(r.hi() >= 0.8);
  CHECK(r.width() <= 2 * ulp(0.8));

  // 4/sqrt(7) bracketed against a long-double evaluation
  Interval q = Interval::over_sqrt(4, 7);
  long double truth = 4.0L / sqrtl(7.0L);
  CHECK(static_cast<long double>(q.lo()) <= truth);
  CHECK(static_cast<long double>(q.hi()) >= truth);
  CHECK(q.width() <= 4 * ulp(1.5));
}

TEST_SUITE_END();
