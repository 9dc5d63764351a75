#include "certbounds/identities.hpp"

#include <cmath>
#include <random>

#include "certbounds/optimizer.hpp"

namespace certbounds {

bool IdentityReport::all_pass() const {
  for (const IdentityLine& l : lines)
    if (!l.pass()) return false;
  return true;
}

namespace {

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Cx draw(std::mt19937_64& rng, double cap) {
  double m = next_unit(rng) * cap;
  double t = next_unit(rng) * 6.283185307179586;
  return Cx(m * std::cos(t), m * std::sin(t));
}

double window_distance(const GrunskyWindow& a, const GrunskyWindow& b) {
  double d = 0.0;
  d = std::max(d, std::abs(a.w11 - b.w11));
  d = std::max(d, std::abs(a.w13 - b.w13));
  d = std::max(d, std::abs(a.w15 - b.w15));
  d = std::max(d, std::abs(a.w17 - b.w17));
  d = std::max(d, std::abs(a.w33 - b.w33));
  d = std::max(d, std::abs(a.w35 - b.w35));
  return d;
}

// Fully consistent window from four free coefficients: w33 and w35 are set
// from the two equality relations.
GrunskyWindow consistent_window(std::mt19937_64& rng) {
  GrunskyWindow w;
  w.w11 = draw(rng, 0.6);
  w.w13 = draw(rng, 0.6);
  w.w15 = draw(rng, 0.6);
  w.w17 = draw(rng, 0.6);
  w.w33 = w.w15 - w.w11 * w.w13 + w.w11 * w.w11 * w.w11 / 3.0;
  w.w35 = w.w17 - w.w11 * w.w33 - w.w13 * w.w13 + w.w11 * w.w11 * w.w11 * w.w11 / 3.0;
  return w;
}

GrunskyWindow draw_scenario_window(std::mt19937_64& rng, Scenario s) {
  Cx f[3];
  std::size_t arity = 3;
  switch (s) {
    case Scenario::kA2Zero:
      f[0] = draw(rng, 0.5);
      f[1] = draw(rng, std::sqrt(std::max(0.0, 1.0 - 3.0 * std::norm(f[0])) / 5.0));
      f[2] = draw(rng, std::sqrt(
                           std::max(0.0, 1.0 - 3.0 * std::norm(f[0]) - 5.0 * std::norm(f[1])) /
                           7.0));
      break;
    case Scenario::kA3Zero: {
      f[0] = draw(rng, 0.5);
      double n11 = std::norm(f[0]);
      double rem = 1.0 - n11 - 6.75 * n11 * n11;
      f[1] = draw(rng, std::sqrt(std::max(0.0, rem) / 5.0));
      f[2] = draw(rng, std::sqrt(std::max(0.0, rem - 5.0 * std::norm(f[1])) / 7.0));
      break;
    }
    case Scenario::kUnconstrained: {
      f[0] = draw(rng, 1.0);
      double rem = 1.0 - std::norm(f[0]);
      f[1] = draw(rng, std::sqrt(std::max(0.0, rem) / 3.0));
      f[2] = draw(rng, std::sqrt(std::max(0.0, rem - 3.0 * std::norm(f[1])) / 5.0));
      break;
    }
    case Scenario::kOddA5A3:
      f[0] = draw(rng, 0.5);
      f[1] = draw(rng, std::sqrt(std::max(0.0, 1.0 - 3.0 * std::norm(f[0])) / 7.0));
      arity = 2;
      break;
  }
  return complete_window(std::span<const Cx>(f, arity), s);
}

}  // namespace

IdentityReport run_identity_suite(std::uint64_t n, std::uint64_t seed) {
  IdentityReport rep;
  std::mt19937_64 rng(seed);

  {
    CoefficientVector a = coefficients_from_grunsky(koebe_window());
    double r = std::max({std::abs(a.a2 - 2.0), std::abs(a.a3 - 3.0), std::abs(a.a4 - 4.0),
                         std::abs(a.a5 - 5.0)});
    rep.lines.push_back({"koebe_coefficients", r, 0.0});
  }
  {
    auto m = feasibility_margins(koebe_window());
    double r = std::max({std::abs(m[0]), std::abs(m[1]), std::abs(m[2]), std::abs(m[3])});
    rep.lines.push_back({"koebe_margins", r, 0.0});
  }
  {
    auto [r1, r2] = consistency_residuals(koebe_window());
    rep.lines.push_back({"koebe_consistency", std::max(std::abs(r1), std::abs(r2)), 0.0});
  }
  {
    double worst = window_distance(
        window_from_coefficients(coefficients_from_grunsky(koebe_window())), koebe_window());
    for (std::uint64_t i = 0; i < 1000; ++i) {
      GrunskyWindow w = consistent_window(rng);
      GrunskyWindow back = window_from_coefficients(coefficients_from_grunsky(w));
      worst = std::max(worst, window_distance(w, back));
    }
    rep.lines.push_back({"coefficient_roundtrip", worst, 1e-14});
  }
  {
    double worst = 0.0;
    for (Scenario s : {Scenario::kA2Zero, Scenario::kA3Zero, Scenario::kOddA5A3}) {
      for (std::uint64_t i = 0; i < n; ++i) {
        auto [r1, r2] = consistency_residuals(draw_scenario_window(rng, s));
        worst = std::max({worst, std::abs(r1), std::abs(r2)});
      }
    }
    rep.lines.push_back({"complete_window_residuals", worst, 1e-14});
  }
  {
    // a5 via the reduced a2 = 0 route against the coefficient route and the
    // intermediate 2 w35 + 5 w13^2 form.
    double worst = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      GrunskyWindow w = draw_scenario_window(rng, Scenario::kA2Zero);
      Cx reduced = a5_a2zero_reduced(w);
      Cx mid_form = 2.0 * w.w35 + 5.0 * w.w13 * w.w13;
      CoefficientVector a = coefficients_from_grunsky(w);
      worst = std::max({worst, std::abs(reduced - a.a5), std::abs(reduced - mid_form),
                        std::abs(std::abs(reduced) - std::abs(a.a5))});
    }
    rep.lines.push_back({"a5_route_agreement", worst, 1e-12});
  }
  {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      GrunskyWindow w = draw_scenario_window(rng, Scenario::kA3Zero);
      Cx reduced = h3_a3zero_reduced(w);
      Cx general = hankel_h3(coefficients_from_grunsky(w));
      worst = std::max(worst, std::abs(reduced - general));
    }
    rep.lines.push_back({"h3_route_agreement", worst, 1e-12});
  }
  {
    const BoundProblem* f6 = find_bound("f6");
    OptimizerConfig cfg;
    cfg.tolerance = 1e-12;
    Enclosure enc = maximize(*f6, cfg);
    double r = std::abs(
        stationary_residual_f6(enc.argmax_box[0].mid(), enc.argmax_box[1].mid()));
    rep.lines.push_back({"f6_stationarity_at_argmax", r, 1e-6});
  }
  return rep;
}

}  // namespace certbounds
