#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "certbounds/grunsky.hpp"

namespace certbounds {

class RejectionBudgetError : public std::runtime_error {
 public:
  explicit RejectionBudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct SampleConfig {
  std::uint64_t n = 1'000'000;
  std::uint64_t seed = 42;
  int threads = 0;  // 0: OpenMP default; the report is identical either way
  /// Slack added to a certified bound before a sampled objective value is
  /// counted as a violation.
  double soundness_margin = 1e-9;
};

/// One objective tested against one certified bound.
struct ObjectiveCheck {
  std::string objective;
  std::string bound_id;
  double bound_hi = 0.0;  // certified max_hi of the backing bound problem
  double observed_max = 0.0;
  GrunskyWindow argmax_window;
  std::uint64_t violations = 0;
};

struct SampleReport {
  Scenario scenario{};
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;  // accepted + rejected draws
  double acceptance_rate = 1.0;
  std::vector<ObjectiveCheck> checks;
  std::uint64_t total_violations() const;
};

/// Draws n feasible windows for the scenario (moduli sampled sequentially
/// inside the nested chain caps, phases uniform, rejection on the final
/// margin check) and tests every scenario objective against its certified
/// bound. Deterministic in (scenario, n, seed): the draw is sharded into
/// fixed-size blocks with derived sub-seeds and merged in block order, so
/// the report does not depend on the worker count. Throws
/// RejectionBudgetError if the acceptance rate falls below 1e-4 and
/// std::invalid_argument when n is zero.
SampleReport sample(Scenario s, const SampleConfig& cfg);
SampleReport sample(Scenario s, std::uint64_t n, std::uint64_t seed);

}  // namespace certbounds
