// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code is the number of failed
// criteria. An optional argument selects a single criterion; a second
// argument may pass the CLI binary path for the cross-process determinism
// check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "certbounds/cli.hpp"
#include "certbounds/identities.hpp"
#include "certbounds/report.hpp"
#include "certbounds/sampler.hpp"

using namespace certbounds;

namespace {

std::string g_cli_path;

struct Criterion {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sig_digits(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

VerificationReport verify_id(const std::string& id) {
  return verify_bound(*find_bound(id));
}

// ---- criterion 1: f1 ------------------------------------------------------
Criterion criterion1() {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = verify_id("f1");
  double elapsed = seconds_since(t0);
  c.require(std::abs(1.026 - r.enclosure.max_hi) <= 5e-4 &&
                std::abs(1.026 - r.enclosure.max_lo) <= 5e-4,
            "enclosure must contain 1.026 within 5e-4");
  c.require(box_point_distance(r.enclosure.argmax_box, {0.286667}) <= 1e-4,
            "argmax within 1e-4 of 0.286667");
  c.require(r.enclosure.max_hi - r.enclosure.max_lo <= 1e-9, "enclosure width <= 1e-9");
  c.require(r.convergence_pass, "converged");
  c.require(elapsed < 1.0, "runtime < 1 s");
  c.note("enclosure [" + format_double(r.enclosure.max_lo) + ", " +
         format_double(r.enclosure.max_hi) + "] in " + sig_digits(elapsed, 3) + " s");
  return c;
}

// ---- criterion 2: a5_a2zero -----------------------------------------------
Criterion criterion2() {
  Criterion c;
  VerificationReport r = verify_id("a5_a2zero");
  c.require(r.closed_form_pass, "certified max equals 3/4 + 1/sqrt(7) to 1e-12");
  c.require(box_point_distance(r.enclosure.argmax_box, {0.5}) <= 1e-6, "argmax at y = 1/2");
  c.require(r.convergence_pass, "converged");
  c.note("max_hi = " + format_double(r.enclosure.max_hi));
  return c;
}

// ---- criterion 3: f2 and f4 coincide --------------------------------------
Criterion criterion3() {
  Criterion c;
  VerificationReport r2 = verify_id("f2");
  VerificationReport r4 = verify_id("f4");
  c.require(r2.closed_form_pass, "f2 equals (1/4)sqrt(21/5) + 5/8 to 1e-12");
  c.require(r4.closed_form_pass, "f4 equals (1/4)sqrt(21/5) + 5/8 to 1e-12");
  c.require(box_point_distance(r2.enclosure.argmax_box, {0.5}) <= 1e-6, "f2 argmax at 1/2");
  c.require(box_point_distance(r4.enclosure.argmax_box, {0.5}) <= 1e-6, "f4 argmax at 1/2");
  c.require(std::abs(r2.enclosure.max_hi - r4.enclosure.max_hi) <= 1e-12 &&
                std::abs(r2.enclosure.max_lo - r4.enclosure.max_lo) <= 1e-12,
            "f2 and f4 agree to 1e-12");
  c.note("f2 max_hi = " + format_double(r2.enclosure.max_hi));
  return c;
}

// ---- criterion 4: f3 ------------------------------------------------------
Criterion criterion4() {
  Criterion c;
  VerificationReport r = verify_id("f3");
  c.require(sig_digits(r.enclosure.max_hi, 10) == "1.674896577" &&
                sig_digits(r.enclosure.max_lo, 10) == "1.674896577",
            "first ten digits are 1.674896577");
  c.require(box_point_distance(r.enclosure.argmax_box, {0.43957885}) <= 1e-6,
            "argmax within 1e-6 of 0.43957885");
  c.require(r.enclosure.max_hi - r.enclosure.max_lo <= 1e-9, "width <= 1e-9");
  c.require(r.convergence_pass, "converged");
  c.note("max_hi = " + format_double(r.enclosure.max_hi));
  return c;
}

// ---- criterion 5: f5 ------------------------------------------------------
Criterion criterion5() {
  Criterion c;
  VerificationReport r = verify_id("f5");
  c.require(sig_digits(r.enclosure.max_hi, 10) == "0.6647958756" &&
                sig_digits(r.enclosure.max_lo, 10) == "0.6647958756",
            "first eleven digits are 0.6647958756");
  c.require(box_point_distance(r.enclosure.argmax_box, {0.458573}) <= 1e-5,
            "argmax within 1e-5 of 0.458573");
  c.require(r.convergence_pass, "converged");
  c.note("max_hi = " + format_double(r.enclosure.max_hi));
  return c;
}

// ---- criterion 6: f6 interior + edges + stationarity -----------------------
Criterion criterion6() {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = verify_id("f6");
  c.require(std::abs(1.75185 - r.enclosure.max_hi) <= 1e-4 &&
                std::abs(1.75185 - r.enclosure.max_lo) <= 1e-4,
            "enclosure contains 1.75185 within 1e-4");
  c.require(box_point_distance(r.enclosure.argmax_box, {0.83634, 0.2872}) <= 1e-3,
            "argmax within 1e-3 of (0.83634, 0.2872)");
  c.require(r.convergence_pass, "converged");

  OptimizerConfig refined;
  refined.tolerance = 1e-12;
  Enclosure fine = maximize(*find_bound("f6"), refined);
  double residual =
      std::abs(stationary_residual_f6(fine.argmax_box[0].mid(), fine.argmax_box[1].mid()));
  c.require(residual <= 1e-6,
            "stationary residual at the refined argmax <= 1e-6 (got " +
                sig_digits(residual, 3) + ")");

  VerificationReport e0 = verify_id("f6_edge_0");
  VerificationReport ey = verify_id("f6_edge_y0");
  VerificationReport ec = verify_id("f6_edge_curve");
  c.require(e0.closed_form_pass, "edge x=0 maximum equals 2/sqrt(5) to 1e-12");
  c.require(std::abs(1.13666 - ey.enclosure.max_hi) <= 5e-4 &&
                std::abs(1.13666 - ey.enclosure.max_lo) <= 5e-4,
            "edge y=0 maximum encloses 1.13666 within 5e-4");
  c.require(std::abs(1.6496 - ec.enclosure.max_hi) <= 5e-4 &&
                std::abs(1.6496 - ec.enclosure.max_lo) <= 5e-4,
            "curved edge maximum encloses 1.6496 within 5e-4");
  double worst_edge = std::max(
      {e0.enclosure.max_hi, ey.enclosure.max_hi, ec.enclosure.max_hi});
  c.require(worst_edge < r.enclosure.max_lo, "every edge maximum strictly below the interior");
  double elapsed = seconds_since(t0);
  c.require(elapsed < 30.0, "runtime < 30 s");
  c.note("interior [" + format_double(r.enclosure.max_lo) + ", " +
         format_double(r.enclosure.max_hi) + "], residual " + sig_digits(residual, 3) +
         ", " + sig_digits(elapsed, 3) + " s");
  return c;
}

// ---- criterion 7: a5_minus_a3_odd ------------------------------------------
Criterion criterion7() {
  Criterion c;
  VerificationReport r = verify_id("a5_minus_a3_odd");
  c.require(r.closed_form_pass, "certified max equals 2/sqrt(7) to 1e-12");
  c.require(box_point_distance(r.enclosure.argmax_box, {0.0}) <= 1e-6, "argmax at y = 0");
  c.require(r.convergence_pass, "converged");
  c.note("max_hi = " + format_double(r.enclosure.max_hi));
  return c;
}

// ---- criterion 8: brute-force grid oracle ----------------------------------
Criterion criterion8() {
  Criterion c;
  for (const BoundProblem& p : all_bounds()) {
    if (p.arity != 1) continue;
    OptimizerConfig cfg;
    cfg.tolerance = p.enclosure_tolerance;
    Enclosure e = maximize(p, cfg);
    const Interval& d = p.domain.box[0];
    const long long n = 1'000'000;
    double worst = -1e300;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (long long i = 0; i <= n; ++i) {
      double x = d.lo() + (d.hi() - d.lo()) * static_cast<double>(i) / static_cast<double>(n);
      double v = p.objective.eval_point(std::vector<double>{x});
      worst = std::max(worst, v);
    }
    c.require(worst <= e.max_hi + 1e-12,
              p.id + ": grid maximum " + format_double(worst) + " exceeds max_hi " +
                  format_double(e.max_hi));
  }
  {
    const BoundProblem& f6 = *find_bound("f6");
    OptimizerConfig cfg;
    cfg.tolerance = f6.enclosure_tolerance;
    Enclosure e = maximize(f6, cfg);
    const long long res = 2263;  // ~5.1e6 nodes, >= 4e6 of them feasible
    const Interval& dx = f6.domain.box[0];
    const Interval& dy = f6.domain.box[1];
    double worst = -1e300;
    long long feasible = 0;
#pragma omp parallel for schedule(static) reduction(max : worst) reduction(+ : feasible)
    for (long long i = 0; i < res; ++i) {
      double x = dx.lo() + (dx.hi() - dx.lo()) * static_cast<double>(i) /
                               static_cast<double>(res - 1);
      for (long long j = 0; j < res; ++j) {
        double y = dy.lo() + (dy.hi() - dy.lo()) * static_cast<double>(j) /
                                 static_cast<double>(res - 1);
        std::vector<double> pt{x, y};
        if (f6.domain.constraint->eval_point(pt) < 0.0) continue;
        ++feasible;
        worst = std::max(worst, f6.objective.eval_point(pt));
      }
    }
    c.require(feasible >= 4'000'000, "f6 grid has >= 4e6 feasible nodes");
    c.require(worst <= e.max_hi + 1e-12, "f6: grid maximum exceeds max_hi");
    c.note("f6 grid max " + format_double(worst) + " vs max_hi " + format_double(e.max_hi) +
           " over " + std::to_string(feasible) + " feasible nodes");
  }
  return c;
}

// ---- criterion 9: sampling soundness ----------------------------------------
Criterion criterion9() {
  Criterion c;
  for (Scenario s : kAllScenarios) {
    auto t0 = std::chrono::steady_clock::now();
    SampleReport r = sample(s, 1'000'000, 42);
    double elapsed = seconds_since(t0);
    c.require(elapsed < 60.0, std::string(scenario_name(s)) + ": runtime < 60 s");
    for (const ObjectiveCheck& chk : r.checks) {
      c.require(chk.violations == 0,
                std::string(scenario_name(s)) + "/" + chk.objective + ": " +
                    std::to_string(chk.violations) + " violations, observed max " +
                    format_double(chk.observed_max) + " vs certified bound " +
                    format_double(chk.bound_hi) + " (" + chk.bound_id + ")");
    }
  }
  return c;
}

// ---- criterion 10: identity suite -------------------------------------------
Criterion criterion10() {
  Criterion c;
  IdentityReport r = run_identity_suite(10'000, 42);
  for (const IdentityLine& l : r.lines) {
    c.require(l.pass(), l.name + ": residual " + format_double(l.max_residual) +
                            " above threshold " + format_double(l.threshold));
  }
  return c;
}

// ---- criterion 11: gradient checks -----------------------------------------
Criterion criterion11() {
  Criterion c;
  std::mt19937_64 rng(42);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double h = 1e-6;
  for (const BoundProblem& p : all_bounds()) {
    double worst = 0.0;
    int checked = 0;
    while (checked < 1000) {
      std::vector<double> pt(p.arity);
      bool ok = true;
      for (int i = 0; i < p.arity; ++i) {
        double lo = p.domain.box[i].lo() + 0.01;
        double hi = p.domain.box[i].hi() - 0.01;
        pt[i] = lo + unit() * (hi - lo);
      }
      if (p.domain.constraint && p.domain.constraint->eval_point(pt) < 0.01) ok = false;
      if (!ok) continue;
      ++checked;
      for (int var = 0; var < p.arity; ++var) {
        double dual = p.objective.eval_derivative(pt, var);
        std::vector<double> up = pt, dn = pt;
        up[var] += h;
        dn[var] -= h;
        double fd = (p.objective.eval_point(up) - p.objective.eval_point(dn)) / (2 * h);
        double rel = std::abs(dual - fd) / std::max({std::abs(dual), std::abs(fd), 1e-2});
        worst = std::max(worst, rel);
      }
    }
    c.require(worst <= 1e-5,
              p.id + ": worst relative derivative error " + format_double(worst));
  }
  return c;
}

// ---- criterion 12: determinism ----------------------------------------------
std::string verify_all_text(int threads) {
  std::vector<VerificationReport> reports;
  OptimizerConfig cfg;
  cfg.threads = threads;
  for (const BoundProblem& p : all_bounds()) reports.push_back(verify_bound(p, cfg));
  return render_verify_all_text(reports, compute_cross_checks(reports));
}

std::string run_process(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

Criterion criterion12() {
  Criterion c;
  std::string a = verify_all_text(0);
  std::string b = verify_all_text(0);
  std::string serial = verify_all_text(1);
  std::string two = verify_all_text(2);
  c.require(!a.empty(), "verify-all produced output");
  c.require(a == b, "verify-all byte-identical across repeated runs");
  c.require(a == serial && a == two, "verify-all byte-identical across worker counts");
  if (!g_cli_path.empty()) {
    std::string p1 = run_process(g_cli_path + " verify-all");
    std::string p2 = run_process(g_cli_path + " verify-all");
    c.require(!p1.empty() && p1 == p2, "CLI verify-all byte-identical across processes");
    c.require(p1 == a, "CLI output matches the in-process report");
  } else {
    c.note("no CLI path given; cross-process check skipped");
  }
  return c;
}

using CriterionFn = Criterion (*)();
constexpr CriterionFn kCriteria[] = {criterion1, criterion2, criterion3, criterion4,
                                     criterion5, criterion6, criterion7, criterion8,
                                     criterion9, criterion10, criterion11, criterion12};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2) g_cli_path = argv[2];

  int failures = 0;
  for (int i = 1; i <= 12; ++i) {
    if (only != 0 && i != only) continue;
    Criterion c = kCriteria[i - 1]();
    if (!c.pass) ++failures;
    std::printf("criterion %2d: %s%s%s\n", i, c.pass ? "PASS" : "FAIL",
                c.detail.empty() ? "" : " — ", c.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
