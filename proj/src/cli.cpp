#include "certbounds/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "certbounds/report.hpp"

namespace certbounds {

namespace {

int write_output(const std::string& text, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    err << "cannot open output path: " << out_path << "\n";
    return kExitUsage;
  }
  f << text;
  return kExitOk;
}

std::string known_ids() {
  std::string s;
  for (const BoundProblem& p : all_bounds()) {
    if (!s.empty()) s += ", ";
    s += p.id;
  }
  return s;
}

std::string known_scenarios() {
  std::string s;
  for (Scenario sc : kAllScenarios) {
    if (!s.empty()) s += ", ";
    s += scenario_name(sc);
  }
  return s;
}

struct VerifyFlags {
  std::string id;
  double tol = 0.0;
  bool tol_given = false;
  std::uint64_t max_boxes = 0;
  bool max_boxes_given = false;
  int threads = 0;
  std::string out_path;
  bool as_json = false;
  bool timings = false;
};

OptimizerConfig make_config(const VerifyFlags& f) {
  OptimizerConfig cfg;
  if (f.tol_given) cfg.tolerance = f.tol;
  if (f.max_boxes_given) cfg.max_boxes = f.max_boxes;
  cfg.threads = f.threads;
  return cfg;
}

int run_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  const BoundProblem* p = find_bound(f.id);
  if (!p) {
    err << "unknown bound id '" << f.id << "'; known ids: " << known_ids() << "\n";
    return kExitUsage;
  }
  VerificationReport r = verify_bound(*p, make_config(f), !f.tol_given);
  std::string text = f.as_json ? render_verification_json(r, f.timings)
                               : render_verification_text(r, f.timings);
  int wc = write_output(text, f.out_path, out, err);
  if (wc != kExitOk) return wc;
  if (r.enclosure.status == SearchStatus::kBudgetExhausted) return kExitBudget;
  return r.pass() ? kExitOk : kExitFail;
}

int run_verify_all(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  bool budget = false;
  for (const BoundProblem& p : all_bounds()) {
    reports.push_back(verify_bound(p, make_config(f), !f.tol_given));
    budget = budget || reports.back().enclosure.status == SearchStatus::kBudgetExhausted;
  }
  CrossChecks cc = compute_cross_checks(reports);
  std::string text =
      f.as_json ? render_verify_all_json(reports, cc) : render_verify_all_text(reports, cc);
  int wc = write_output(text, f.out_path, out, err);
  if (wc != kExitOk) return wc;
  if (budget) return kExitBudget;
  bool all = cc.f2_f4_pass && cc.edge_dominance_pass;
  for (const VerificationReport& r : reports) all = all && r.pass();
  return all ? kExitOk : kExitFail;
}

int run_sample(const std::string& scenario, const SampleConfig& cfg, const std::string& out_path,
               bool as_json, std::ostream& out, std::ostream& err) {
  std::optional<Scenario> s = scenario_from_name(scenario);
  if (!s) {
    err << "unknown scenario '" << scenario << "'; known scenarios: " << known_scenarios()
        << "\n";
    return kExitUsage;
  }
  SampleReport r;
  try {
    r = sample(*s, cfg);
  } catch (const RejectionBudgetError& e) {
    err << e.what() << "\n";
    return kExitRejection;
  }
  std::string text = as_json ? render_sample_json(r) : render_sample_text(r);
  int wc = write_output(text, out_path, out, err);
  if (wc != kExitOk) return wc;
  return r.total_violations() == 0 ? kExitOk : kExitFail;
}

int run_grid(const std::string& id, int resolution, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  const BoundProblem* p = find_bound(id);
  if (!p) {
    err << "unknown bound id '" << id << "'; known ids: " << known_ids() << "\n";
    return kExitUsage;
  }
  if (resolution < 2) {
    err << "grid resolution must be at least 2\n";
    return kExitUsage;
  }
  auto node = [&](const Interval& c, int i) {
    if (i == resolution - 1) return c.hi();
    return c.lo() + (c.hi() - c.lo()) * static_cast<double>(i) /
                        static_cast<double>(resolution - 1);
  };
  std::ostringstream csv;
  if (p->arity == 1) {
    csv << "x," << p->id << "\n";
    for (int i = 0; i < resolution; ++i) {
      std::vector<double> pt{node(p->domain.box[0], i)};
      csv << format_double(pt[0]) << "," << format_double(p->objective.eval_point(pt)) << "\n";
    }
  } else {
    csv << "x,y," << p->id << "\n";
    for (int i = 0; i < resolution; ++i) {
      double x = node(p->domain.box[0], i);
      for (int j = 0; j < resolution; ++j) {
        double y = node(p->domain.box[1], j);
        std::vector<double> pt{x, y};
        if (p->domain.constraint && p->domain.constraint->eval_point(pt) < 0.0) continue;
        csv << format_double(x) << "," << format_double(y) << ","
            << format_double(p->objective.eval_point(pt)) << "\n";
      }
    }
  }
  return write_output(csv.str(), out_path, out, err);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certified enclosures for extremal coefficient bounds of univalent functions"};
  app.require_subcommand(1);

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "certify one bound and check its constant");
  verify->add_option("id", vf.id, "bound id (see verify-all for the list)")->required();
  auto* tol_opt = verify->add_option("--tol", vf.tol, "enclosure width target");
  auto* boxes_opt = verify->add_option("--max-boxes", vf.max_boxes, "box budget");
  verify->add_option("--threads", vf.threads, "worker count (0 = all)");
  verify->add_option("--out", vf.out_path, "write the report to a file");
  verify->add_flag("--json", vf.as_json, "emit a structured report");
  verify->add_flag("--timings", vf.timings, "include wall time (non-reproducible field)");

  VerifyFlags af;
  CLI::App* verify_all = app.add_subcommand("verify-all", "certify all bounds and cross-checks");
  auto* a_tol_opt = verify_all->add_option("--tol", af.tol, "enclosure width target");
  verify_all->add_option("--threads", af.threads, "worker count (0 = all)");
  verify_all->add_option("--out", af.out_path, "write the report to a file");
  verify_all->add_flag("--json", af.as_json, "emit a structured report");

  std::string scenario;
  SampleConfig scfg;
  std::string sample_out;
  bool sample_json = false;
  CLI::App* smp = app.add_subcommand("sample", "stress-test bounds on random feasible windows");
  smp->add_option("--scenario", scenario, "one of: " + known_scenarios())->required();
  smp->add_option("--n", scfg.n, "number of accepted windows");
  smp->add_option("--seed", scfg.seed, "RNG seed");
  smp->add_option("--threads", scfg.threads, "worker count (0 = all)");
  smp->add_option("--out", sample_out, "write the report to a file");
  smp->add_flag("--json", sample_json, "emit a structured report");

  std::uint64_t ident_n = 10'000;
  std::uint64_t ident_seed = 42;
  CLI::App* ident = app.add_subcommand("identities", "run the algebraic identity suite");
  ident->add_option("--n", ident_n, "windows per identity");
  ident->add_option("--seed", ident_seed, "RNG seed");

  std::string grid_id;
  int grid_resolution = 0;
  std::string grid_out;
  CLI::App* grid = app.add_subcommand("grid", "emit a CSV sampling of a bound function");
  grid->add_option("id", grid_id, "bound id")->required();
  grid->add_option("--resolution", grid_resolution, "nodes per axis")->required();
  grid->add_option("--out", grid_out, "write the CSV to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (verify->parsed()) {
    vf.tol_given = tol_opt->count() > 0;
    vf.max_boxes_given = boxes_opt->count() > 0;
    return run_verify(vf, out, err);
  }
  if (verify_all->parsed()) {
    af.tol_given = a_tol_opt->count() > 0;
    return run_verify_all(af, out, err);
  }
  if (smp->parsed()) return run_sample(scenario, scfg, sample_out, sample_json, out, err);
  if (ident->parsed()) {
    IdentityReport r = run_identity_suite(ident_n, ident_seed);
    out << render_identities_text(r);
    return r.all_pass() ? kExitOk : kExitFail;
  }
  if (grid->parsed()) return run_grid(grid_id, grid_resolution, grid_out, out, err);
  err << app.help();
  return kExitUsage;
}

}  // namespace certbounds
