#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "certbounds/grunsky.hpp"

namespace certbounds {

struct IdentityLine {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass() const { return max_residual <= threshold; }
};

struct IdentityReport {
  std::vector<IdentityLine> lines;
  bool all_pass() const;
};

/// Runs the algebraic identity suite: the extremal-window round trip, the
/// equality-relation closure of every completed scenario, agreement of the
/// reduced a5 and H3(1) routes with the general coefficient route, the
/// triangular inversion, and the f6 stationarity residual at the refined
/// certified argmax.
IdentityReport run_identity_suite(std::uint64_t n, std::uint64_t seed);

}  // namespace certbounds
