#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "certbounds/expr.hpp"

namespace certbounds {

/// Region a bound function is maximized over: a bounding box plus an
/// optional implicit constraint g(p) >= 0.
struct DomainSpec {
  Box box;
  std::optional<Expr> constraint;
  /// Optional map from a point of the box to a nearby feasible point; the
  /// returned point must satisfy the constraint exactly (not just in
  /// rounded arithmetic).
  std::function<std::vector<double>(const std::vector<double>&)> project_feasible;
};

/// One registered maximization problem: objective, domain, the expected
/// constant with its tolerance class, and the expected maximizer.
struct BoundProblem {
  std::string id;
  int arity = 1;
  Expr objective;
  DomainSpec domain;
  double expected_value = 0.0;
  /// Set when the expected value is an exact closed form; certified maxima
  /// are then additionally compared against it to 1e-12.
  std::optional<Interval> closed_form;
  std::vector<double> expected_argmax;
  double value_tolerance = 0.0;
  double argmax_tolerance = 0.0;
  /// Default enclosure width the verifier asks the optimizer for; tight
  /// enough that the value tolerance above is meaningful.
  double enclosure_tolerance = 1e-9;
  std::string note;
};

/// The eight registered bound problems. Registration self-checks run on
/// first use: expected maximizers lie in their domains, objectives evaluate
/// to the expected constants within tolerance, radicands are admissible.
const std::vector<BoundProblem>& catalog();

/// The three one-variable restrictions of f6 along the edges of its domain.
const std::vector<BoundProblem>& f6_edge_curves();

/// catalog() followed by f6_edge_curves(); the full CLI vocabulary.
const std::vector<BoundProblem>& all_bounds();

/// Lookup by id over all_bounds(); nullptr when unknown.
const BoundProblem* find_bound(const std::string& id);

}  // namespace certbounds
