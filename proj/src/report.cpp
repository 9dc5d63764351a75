#include "certbounds/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace certbounds {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string format_point(const std::vector<double>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += format_double(p[i]);
  }
  return out + ")";
}

std::string format_box(const Box& b) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += " x ";
    out += "[" + format_double(b[i].lo()) + ", " + format_double(b[i].hi()) + "]";
  }
  return out;
}

const char* status_name(SearchStatus s) {
  return s == SearchStatus::kConverged ? "converged" : "budget_exhausted";
}

const char* pass_str(bool b) { return b ? "true" : "false"; }

json box_json(const Box& b) {
  json arr = json::array();
  for (const Interval& c : b) arr.push_back({format_double(c.lo()), format_double(c.hi())});
  return arr;
}

std::string format_cx(const Cx& z) {
  return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

json window_json(const GrunskyWindow& w) {
  json j;
  j["w11"] = {format_double(w.w11.real()), format_double(w.w11.imag())};
  j["w13"] = {format_double(w.w13.real()), format_double(w.w13.imag())};
  j["w15"] = {format_double(w.w15.real()), format_double(w.w15.imag())};
  j["w17"] = {format_double(w.w17.real()), format_double(w.w17.imag())};
  j["w33"] = {format_double(w.w33.real()), format_double(w.w33.imag())};
  j["w35"] = {format_double(w.w35.real()), format_double(w.w35.imag())};
  return j;
}

std::string window_text(const GrunskyWindow& w) {
  return "w11=" + format_cx(w.w11) + " w13=" + format_cx(w.w13) + " w15=" + format_cx(w.w15) +
         " w17=" + format_cx(w.w17) + " w33=" + format_cx(w.w33) + " w35=" + format_cx(w.w35);
}

}  // namespace

CrossChecks compute_cross_checks(const std::vector<VerificationReport>& reports) {
  CrossChecks cc;
  const VerificationReport* f2 = nullptr;
  const VerificationReport* f4 = nullptr;
  const VerificationReport* f6 = nullptr;
  std::vector<const VerificationReport*> edges;
  for (const VerificationReport& r : reports) {
    if (r.bound_id == "f2") f2 = &r;
    if (r.bound_id == "f4") f4 = &r;
    if (r.bound_id == "f6") f6 = &r;
    if (r.bound_id.rfind("f6_edge_", 0) == 0) edges.push_back(&r);
  }
  if (f2 && f4) {
    cc.f2_f4_hi_diff = std::abs(f2->enclosure.max_hi - f4->enclosure.max_hi);
    cc.f2_f4_lo_diff = std::abs(f2->enclosure.max_lo - f4->enclosure.max_lo);
    cc.f2_f4_pass = cc.f2_f4_hi_diff <= kClosedFormTolerance &&
                    cc.f2_f4_lo_diff <= kClosedFormTolerance;
  }
  if (f6 && !edges.empty()) {
    cc.f6_interior_lo = f6->enclosure.max_lo;
    cc.worst_edge_hi = edges[0]->enclosure.max_hi;
    for (const VerificationReport* e : edges)
      cc.worst_edge_hi = std::max(cc.worst_edge_hi, e->enclosure.max_hi);
    cc.edge_dominance_pass = cc.worst_edge_hi < cc.f6_interior_lo;
  }
  return cc;
}

std::string render_verification_text(const VerificationReport& r, bool with_timings) {
  std::ostringstream out;
  out << "bound_id: " << r.bound_id << "\n";
  out << "status: " << status_name(r.enclosure.status) << "\n";
  out << "max_lo: " << format_double(r.enclosure.max_lo) << "\n";
  out << "max_hi: " << format_double(r.enclosure.max_hi) << "\n";
  out << "enclosure_width: " << format_double(r.enclosure.max_hi - r.enclosure.max_lo) << "\n";
  out << "argmax_box: " << format_box(r.enclosure.argmax_box) << "\n";
  out << "witness: " << format_point(r.enclosure.witness) << "\n";
  out << "boxes_processed: " << r.enclosure.boxes_processed << "\n";
  out << "expected_value: " << format_double(r.expected_value) << "\n";
  out << "expected_argmax: " << format_point(r.expected_argmax) << "\n";
  out << "value_tolerance: " << format_double(r.value_tolerance) << "\n";
  out << "argmax_tolerance: " << format_double(r.argmax_tolerance) << "\n";
  if (r.has_closed_form)
    out << "closed_form: " << format_double(r.closed_form_value) << "\n";
  out << "value_pass: " << pass_str(r.value_pass) << "\n";
  out << "argmax_pass: " << pass_str(r.argmax_pass) << "\n";
  out << "convergence_pass: " << pass_str(r.convergence_pass) << "\n";
  if (r.has_closed_form)
    out << "closed_form_pass: " << pass_str(r.closed_form_pass) << "\n";
  if (with_timings)
    out << "wall_time_seconds: " << format_double(r.wall_time_seconds) << "\n";
  out << "overall: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

json verification_json_obj(const VerificationReport& r, bool with_timings) {
  json j;
  j["bound_id"] = r.bound_id;
  j["enclosure"] = {{"max_lo", format_double(r.enclosure.max_lo)},
                    {"max_hi", format_double(r.enclosure.max_hi)}};
  j["argmax_box"] = box_json(r.enclosure.argmax_box);
  j["witness"] = [&] {
    json arr = json::array();
    for (double v : r.enclosure.witness) arr.push_back(format_double(v));
    return arr;
  }();
  j["status"] = status_name(r.enclosure.status);
  j["boxes_processed"] = r.enclosure.boxes_processed;
  j["expected_value"] = format_double(r.expected_value);
  j["expected_argmax"] = [&] {
    json arr = json::array();
    for (double v : r.expected_argmax) arr.push_back(format_double(v));
    return arr;
  }();
  j["value_pass"] = r.value_pass;
  j["argmax_pass"] = r.argmax_pass;
  j["convergence_pass"] = r.convergence_pass;
  if (r.has_closed_form) {
    j["closed_form"] = format_double(r.closed_form_value);
    j["closed_form_pass"] = r.closed_form_pass;
  }
  if (with_timings) j["wall_time"] = r.wall_time_seconds;
  j["pass"] = r.pass();
  return j;
}

}  // namespace

std::string render_verification_json(const VerificationReport& r, bool with_timings) {
  return verification_json_obj(r, with_timings).dump(2) + "\n";
}

std::string render_verify_all_text(const std::vector<VerificationReport>& reports,
                                   const CrossChecks& cc) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const VerificationReport& r : reports) {
    if (r.pass()) ++passed;
    out << r.bound_id << ": max_lo=" << format_double(r.enclosure.max_lo)
        << " max_hi=" << format_double(r.enclosure.max_hi)
        << " expected=" << format_double(r.expected_value)
        << " " << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  for (const VerificationReport& r : reports) {
    if (!r.has_closed_form) continue;
    out << "crosscheck " << r.bound_id
        << "_closed_form: |max_hi - " << format_double(r.closed_form_value)
        << "|=" << format_double(std::abs(r.enclosure.max_hi - r.closed_form_value))
        << " tolerance 1e-12 " << (r.closed_form_pass ? "PASS" : "FAIL") << "\n";
  }
  out << "crosscheck f2_f4_agreement: |hi diff|=" << format_double(cc.f2_f4_hi_diff)
      << " |lo diff|=" << format_double(cc.f2_f4_lo_diff) << " tolerance 1e-12 "
      << (cc.f2_f4_pass ? "PASS" : "FAIL") << "\n";
  out << "crosscheck edge_dominance: worst edge max_hi=" << format_double(cc.worst_edge_hi)
      << " < f6 max_lo=" << format_double(cc.f6_interior_lo) << " "
      << (cc.edge_dominance_pass ? "PASS" : "FAIL") << "\n";
  bool all = passed == reports.size() && cc.f2_f4_pass && cc.edge_dominance_pass;
  out << "overall: " << (all ? "PASS" : "FAIL") << " (" << passed << "/" << reports.size()
      << " bounds)\n";
  return out.str();
}

std::string render_verify_all_json(const std::vector<VerificationReport>& reports,
                                   const CrossChecks& cc) {
  json j;
  json arr = json::array();
  std::size_t passed = 0;
  for (const VerificationReport& r : reports) {
    if (r.pass()) ++passed;
    arr.push_back(verification_json_obj(r, false));
  }
  j["bounds"] = arr;
  j["crosschecks"] = {{"f2_f4_hi_diff", format_double(cc.f2_f4_hi_diff)},
                      {"f2_f4_lo_diff", format_double(cc.f2_f4_lo_diff)},
                      {"f2_f4_pass", cc.f2_f4_pass},
                      {"worst_edge_hi", format_double(cc.worst_edge_hi)},
                      {"f6_interior_lo", format_double(cc.f6_interior_lo)},
                      {"edge_dominance_pass", cc.edge_dominance_pass}};
  j["pass"] = passed == reports.size() && cc.f2_f4_pass && cc.edge_dominance_pass;
  return j.dump(2) + "\n";
}

std::string render_sample_text(const SampleReport& r) {
  std::ostringstream out;
  out << "scenario: " << scenario_name(r.scenario) << "\n";
  out << "n: " << r.n << "\n";
  out << "seed: " << r.seed << "\n";
  out << "attempts: " << r.attempts << "\n";
  out << "acceptance_rate: " << format_double(r.acceptance_rate) << "\n";
  for (const ObjectiveCheck& c : r.checks) {
    out << "objective " << c.objective << ": observed_max=" << format_double(c.observed_max)
        << " bound_id=" << c.bound_id << " bound_hi=" << format_double(c.bound_hi)
        << " violations=" << c.violations << "\n";
    out << "  argmax_window: " << window_text(c.argmax_window) << "\n";
  }
  out << "total_violations: " << r.total_violations() << "\n";
  return out.str();
}

std::string render_sample_json(const SampleReport& r) {
  json j;
  j["scenario"] = scenario_name(r.scenario);
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["attempts"] = r.attempts;
  j["acceptance_rate"] = format_double(r.acceptance_rate);
  json arr = json::array();
  for (const ObjectiveCheck& c : r.checks) {
    json cj;
    cj["objective"] = c.objective;
    cj["bound_id"] = c.bound_id;
    cj["bound_hi"] = format_double(c.bound_hi);
    cj["observed_max"] = format_double(c.observed_max);
    cj["violations"] = c.violations;
    cj["argmax_window"] = window_json(c.argmax_window);
    arr.push_back(cj);
  }
  j["checks"] = arr;
  j["total_violations"] = r.total_violations();
  return j.dump(2) + "\n";
}

std::string render_identities_text(const IdentityReport& r) {
  std::ostringstream out;
  for (const IdentityLine& l : r.lines) {
    out << "identity " << l.name << ": max_residual=" << format_double(l.max_residual)
        << " threshold=" << format_double(l.threshold) << " " << (l.pass() ? "PASS" : "FAIL")
        << "\n";
  }
  out << "overall: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace certbounds
