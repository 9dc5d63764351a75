#include "certbounds/grunsky.hpp"

namespace certbounds {

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kA2Zero: return "a2_zero";
    case Scenario::kA3Zero: return "a3_zero";
    case Scenario::kUnconstrained: return "unconstrained_thm6";
    case Scenario::kOddA5A3: return "odd_a5a3";
  }
  return "?";
}

std::optional<Scenario> scenario_from_name(std::string_view name) {
  for (Scenario s : kAllScenarios)
    if (name == scenario_name(s)) return s;
  return std::nullopt;
}

CoefficientVector coefficients_from_grunsky(const GrunskyWindow& w) {
  CoefficientVector a;
  Cx w11_2 = w.w11 * w.w11;
  Cx w11_3 = w11_2 * w.w11;
  Cx w11_4 = w11_2 * w11_2;
  a.a2 = 2.0 * w.w11;
  a.a3 = 2.0 * w.w13 + 3.0 * w11_2;
  a.a4 = 2.0 * w.w33 + 8.0 * w.w11 * w.w13 + (10.0 / 3.0) * w11_3;
  a.a5 = 2.0 * w.w35 + 8.0 * w.w11 * w.w33 + 5.0 * w.w13 * w.w13 + 18.0 * w11_2 * w.w13 +
         (7.0 / 3.0) * w11_4;
  return a;
}

GrunskyWindow window_from_coefficients(const CoefficientVector& a) {
  GrunskyWindow w;
  w.w11 = a.a2 / 2.0;
  Cx w11_2 = w.w11 * w.w11;
  Cx w11_3 = w11_2 * w.w11;
  Cx w11_4 = w11_2 * w11_2;
  w.w13 = (a.a3 - 3.0 * w11_2) / 2.0;
  w.w33 = (a.a4 - 8.0 * w.w11 * w.w13 - (10.0 / 3.0) * w11_3) / 2.0;
  w.w35 = (a.a5 - 8.0 * w.w11 * w.w33 - 5.0 * w.w13 * w.w13 - 18.0 * w11_2 * w.w13 -
           (7.0 / 3.0) * w11_4) /
          2.0;
  w.w15 = w.w11 * w.w13 - w11_3 / 3.0 + w.w33;
  w.w17 = w.w35 + w.w11 * w.w33 + w.w13 * w.w13 - w11_4 / 3.0;
  return w;
}

std::pair<Cx, Cx> consistency_residuals(const GrunskyWindow& w) {
  Cx w11_3 = w.w11 * w.w11 * w.w11;
  Cx w11_4 = w11_3 * w.w11;
  Cx r1 = 3.0 * w.w15 - 3.0 * w.w11 * w.w13 + w11_3 - 3.0 * w.w33;
  Cx r2 = w.w17 - w.w35 - w.w11 * w.w33 - w.w13 * w.w13 + w11_4 / 3.0;
  return {r1, r2};
}

GrunskyWindow complete_window(std::span<const Cx> free_coeffs, Scenario s) {
  auto need = [&](std::size_t n) {
    if (free_coeffs.size() != n)
      throw ScenarioArityError(std::string(scenario_name(s)) + ": expected " +
                               std::to_string(n) + " free coefficients, got " +
                               std::to_string(free_coeffs.size()));
  };
  GrunskyWindow w;
  switch (s) {
    case Scenario::kA2Zero: {
      need(3);
      w.w13 = free_coeffs[0];
      w.w15 = free_coeffs[1];
      w.w17 = free_coeffs[2];
      w.w33 = w.w15;
      w.w35 = w.w17 - w.w13 * w.w13;
      return w;
    }
    case Scenario::kA3Zero: {
      need(3);
      w.w11 = free_coeffs[0];
      w.w15 = free_coeffs[1];
      w.w17 = free_coeffs[2];
      Cx w11_2 = w.w11 * w.w11;
      Cx w11_3 = w11_2 * w.w11;
      w.w13 = -1.5 * w11_2;
      w.w33 = w.w15 + (11.0 / 6.0) * w11_3;
      w.w35 = w.w17 - w.w11 * w.w15 - 3.75 * w11_2 * w11_2;
      return w;
    }
    case Scenario::kUnconstrained: {
      need(3);
      w.w11 = free_coeffs[0];
      w.w13 = free_coeffs[1];
      w.w15 = free_coeffs[2];
      w.w33 = w.w15 - w.w11 * w.w13 + w.w11 * w.w11 * w.w11 / 3.0;
      return w;
    }
    case Scenario::kOddA5A3: {
      need(2);
      w.w13 = free_coeffs[0];
      w.w17 = free_coeffs[1];
      w.w35 = w.w17 - w.w13 * w.w13;
      return w;
    }
  }
  throw std::logic_error("unknown scenario");
}

std::array<double, 4> feasibility_margins(const GrunskyWindow& w) {
  double m1 = 1.0 - std::norm(w.w11);
  double m2 = m1 - 3.0 * std::norm(w.w13);
  double m3 = m2 - 5.0 * std::norm(w.w15);
  double m4 = m3 - 7.0 * std::norm(w.w17);
  return {m1, m2, m3, m4};
}

Cx hankel_h2(const CoefficientVector& a) { return a.a2 * a.a4 - a.a3 * a.a3; }

Cx hankel_h3(const CoefficientVector& a) {
  return a.a3 * (a.a2 * a.a4 - a.a3 * a.a3) - a.a4 * (a.a4 - a.a2 * a.a3) +
         a.a5 * (a.a3 - a.a2 * a.a2);
}

ObjectiveValues objectives(const GrunskyWindow& w) {
  CoefficientVector a = coefficients_from_grunsky(w);
  ObjectiveValues o;
  o.abs_a2 = std::abs(a.a2);
  o.abs_a3 = std::abs(a.a3);
  o.abs_a4 = std::abs(a.a4);
  o.abs_a5 = std::abs(a.a5);
  o.h2 = std::abs(hankel_h2(a));
  o.h3 = std::abs(hankel_h3(a));
  o.a4_minus_a3 = o.abs_a4 - o.abs_a3;
  o.a5_minus_a3 = o.abs_a5 - o.abs_a3;
  return o;
}

Cx h3_a3zero_reduced(const GrunskyWindow& w) {
  Cx w11_2 = w.w11 * w.w11;
  return -4.0 * w.w15 * w.w15 - 4.0 * w11_2 * w.w11 * w.w15 - 8.0 * w11_2 * w.w17;
}

Cx a5_a2zero_reduced(const GrunskyWindow& w) { return 2.0 * w.w17 + 3.0 * w.w13 * w.w13; }

double grunsky_form_margin(const GrunskyWindow& w, Cx x1, Cx x3) {
  double lhs = std::norm(x1) + std::norm(x3) / 3.0;
  double rhs = std::norm(w.w11 * x1 + w.w13 * x3) + 3.0 * std::norm(w.w13 * x1 + w.w33 * x3) +
               5.0 * std::norm(w.w15 * x1 + w.w35 * x3);
  return lhs - rhs;
}

GrunskyWindow koebe_window() {
  GrunskyWindow w;
  w.w11 = 1.0;
  w.w33 = 1.0 / 3.0;
  return w;
}

}  // namespace certbounds
