#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "certbounds/catalog.hpp"

namespace certbounds {

enum class SearchStatus { kConverged, kBudgetExhausted };

struct OptimizerConfig {
  /// Target width of the certified enclosure [max_lo, max_hi].
  double tolerance = 1e-9;
  /// Budget of expanded boxes; exceeding it returns the best enclosure so
  /// far with status kBudgetExhausted.
  std::uint64_t max_boxes = 10'000'000;
  /// Discard strictly interior boxes whose partial-derivative enclosure
  /// excludes zero.
  bool use_derivative_pruning = true;
  /// Margin by which a box must clear the constraint before derivative
  /// pruning treats it as interior.
  double constraint_feasibility_eps = 1e-14;
  /// Convergence additionally requires every remaining candidate box to be
  /// at most this wide, so argmax_box localizes the maximizer even when the
  /// objective is flat enough to reach the value tolerance on coarse boxes.
  double argmax_resolution = 1e-7;
  /// Worker count for the parallel engine; 0 uses the OpenMP default,
  /// 1 runs serially. The enclosure is identical for every setting.
  int threads = 0;
};

/// Certified result of a global maximization. The true maximum over the
/// feasible domain lies in [max_lo, max_hi]; max_lo is the certified value
/// of the objective at the recorded witness point.
struct Enclosure {
  double max_lo = 0.0;
  double max_hi = 0.0;
  /// Hull of every undiscarded box whose upper bound exceeds max_lo.
  Box argmax_box;
  std::vector<double> witness;
  std::uint64_t boxes_processed = 0;
  SearchStatus status = SearchStatus::kBudgetExhausted;
};

/// Deterministic best-first branch-and-bound maximization. Rounds of up to
/// a fixed number of boxes are expanded (in parallel when configured) and
/// merged in queue order, so the result does not depend on the worker
/// count. Throws DomainError when the initial box is entirely infeasible.
Enclosure maximize(const BoundProblem& problem, const OptimizerConfig& cfg = {});

/// Plain single-pop serial best-first search kept as a reference
/// implementation for testing and benchmarking the round engine.
Enclosure maximize_reference(const BoundProblem& problem, const OptimizerConfig& cfg = {});

/// Combined stationarity relation of the f6 objective with the radical
/// terms cancelled: x^2 (9y - 4) + 12 y^2. Zero at interior stationary
/// points of f6.
double stationary_residual_f6(double x, double y);

struct VerificationReport {
  std::string bound_id;
  Enclosure enclosure;
  double expected_value = 0.0;
  std::vector<double> expected_argmax;
  double value_tolerance = 0.0;
  double argmax_tolerance = 0.0;
  bool value_pass = false;
  bool argmax_pass = false;
  bool convergence_pass = false;
  /// Closed-form comparison to 1e-12; vacuously true when the entry has no
  /// closed form.
  bool closed_form_pass = true;
  bool has_closed_form = false;
  double closed_form_value = 0.0;
  double wall_time_seconds = 0.0;
  bool pass() const { return value_pass && argmax_pass && convergence_pass && closed_form_pass; }
};

/// Distance from a point to the farthest point of a box, maximized over
/// coordinates; the argmax check requires this to be small.
double box_point_distance(const Box& box, const std::vector<double>& p);

/// Runs maximize and evaluates the expectation checks. With
/// use_problem_tolerance (the default) the search runs at the entry's own
/// enclosure tolerance instead of cfg.tolerance.
VerificationReport verify_bound(const BoundProblem& problem, const OptimizerConfig& cfg = {},
                                bool use_problem_tolerance = true);

inline constexpr double kClosedFormTolerance = 1e-12;

}  // namespace certbounds
