#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "certbounds/interval.hpp"

namespace certbounds {

using Cx = std::complex<double>;

/// Truncated window of Grunsky coefficients of the square-root transform.
/// Indices follow omega_{2p-1,2q-1} with the upper index dropped.
struct GrunskyWindow {
  Cx w11{}, w13{}, w15{}, w17{}, w33{}, w35{};
};

/// Taylor coefficients a2..a5 of the underlying function.
struct CoefficientVector {
  Cx a2{}, a3{}, a4{}, a5{};
};

/// Sampling scenarios: which window coefficients are free, which are
/// determined by the equality relations, and which modulus caps apply.
enum class Scenario { kA2Zero, kA3Zero, kUnconstrained, kOddA5A3 };

const char* scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(std::string_view name);
inline constexpr std::array<Scenario, 4> kAllScenarios = {
    Scenario::kA2Zero, Scenario::kA3Zero, Scenario::kUnconstrained, Scenario::kOddA5A3};

class ScenarioArityError : public std::runtime_error {
 public:
  explicit ScenarioArityError(const std::string& what) : std::runtime_error(what) {}
};

/// Triangular coefficient map a2..a5 from the window.
CoefficientVector coefficients_from_grunsky(const GrunskyWindow& w);

/// Inverse of the triangular map; w15 and w17 are rebuilt through the two
/// equality relations, so the input must come from a consistent window.
GrunskyWindow window_from_coefficients(const CoefficientVector& a);

/// Left-hand sides of the two equality relations tying the window together;
/// both are zero exactly when the window is consistent.
std::pair<Cx, Cx> consistency_residuals(const GrunskyWindow& w);

/// Builds a full window from the scenario's free coefficients:
///   a2_zero:  (w13, w15, w17), w11 = 0, w33 = w15, w35 = w17 - w13^2
///   a3_zero:  (w11, w15, w17), w13 = -(3/2)w11^2, w33 = w15 + (11/6)w11^3,
///             w35 = w17 - w11 w15 - (15/4)w11^4
///   unconstrained_thm6: (w11, w13, w15), w33 = w15 - w11 w13 + w11^3/3,
///             w17 = w35 = 0 (unused by the |a4|-|a3| objective)
///   odd_a5a3: (w13, w17), w11 = w15 = w33 = 0, w35 = w17 - w13^2
GrunskyWindow complete_window(std::span<const Cx> free_coeffs, Scenario s);

/// Nested modulus-chain margins; the window is feasible iff all four are
/// nonnegative.
std::array<double, 4> feasibility_margins(const GrunskyWindow& w);

Cx hankel_h2(const CoefficientVector& a);
Cx hankel_h3(const CoefficientVector& a);

struct ObjectiveValues {
  double h2 = 0.0;  // |a2 a4 - a3^2|
  double h3 = 0.0;  // |H3(1)|
  double a4_minus_a3 = 0.0;
  double a5_minus_a3 = 0.0;
  double abs_a2 = 0.0, abs_a3 = 0.0, abs_a4 = 0.0, abs_a5 = 0.0;
};

ObjectiveValues objectives(const GrunskyWindow& w);

/// Reduced H3(1) for windows completed under a3 = 0:
/// -4 w15^2 - 4 w11^3 w15 - 8 w11^2 w17, algebraically identical to the
/// general route through a2..a5.
Cx h3_a3zero_reduced(const GrunskyWindow& w);

/// Reduced a5 for windows completed under a2 = 0: 2 w17 + 3 w13^2.
Cx a5_a2zero_reduced(const GrunskyWindow& w);

/// Slack of the truncated quadratic-form inequality at test vector
/// (x1, x3); nonnegative for windows of actual univalent functions.
double grunsky_form_margin(const GrunskyWindow& w, Cx x1, Cx x3);

/// Window of the extremal function z/(1-z)^2; maps to coefficients
/// (2, 3, 4, 5) and saturates every feasibility margin.
GrunskyWindow koebe_window();

}  // namespace certbounds
