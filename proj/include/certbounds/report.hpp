#pragma once

#include <string>
#include <vector>

#include "certbounds/identities.hpp"
#include "certbounds/optimizer.hpp"
#include "certbounds/sampler.hpp"

namespace certbounds {

/// 17 significant digits, locale-independent; enough to reproduce the
/// double exactly.
std::string format_double(double v);

/// Consistency checks across bounds emitted by verify-all: the f2/f4
/// endpoint coincidence and dominance of the f6 interior maximum over its
/// edge restrictions.
struct CrossChecks {
  double f2_f4_hi_diff = 0.0;
  double f2_f4_lo_diff = 0.0;
  bool f2_f4_pass = false;
  double f6_interior_lo = 0.0;
  double worst_edge_hi = 0.0;
  bool edge_dominance_pass = false;
};

CrossChecks compute_cross_checks(const std::vector<VerificationReport>& reports);

// Timing fields are omitted unless with_timings is set, so default reports
// are byte-identical across runs.
std::string render_verification_text(const VerificationReport& r, bool with_timings = false);
std::string render_verification_json(const VerificationReport& r, bool with_timings = false);
std::string render_verify_all_text(const std::vector<VerificationReport>& reports,
                                   const CrossChecks& cc);
std::string render_verify_all_json(const std::vector<VerificationReport>& reports,
                                   const CrossChecks& cc);
std::string render_sample_text(const SampleReport& r);
std::string render_sample_json(const SampleReport& r);
std::string render_identities_text(const IdentityReport& r);

}  // namespace certbounds
