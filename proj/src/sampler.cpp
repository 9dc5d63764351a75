#include "certbounds/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "certbounds/optimizer.hpp"

namespace certbounds {

std::uint64_t SampleReport::total_violations() const {
  std::uint64_t t = 0;
  for (const ObjectiveCheck& c : checks) t += c.violations;
  return t;
}

namespace {

constexpr std::uint64_t kShardSize = 1u << 16;
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kMinAcceptance = 1e-4;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ull * (shard + 1));
}

// Uniform in [0, 1) from the full 53-bit mantissa; avoids the
// implementation-defined std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Cx draw_coefficient(std::mt19937_64& rng, double cap) {
  double m = next_unit(rng) * cap;
  double t = next_unit(rng) * kTwoPi;
  return Cx(m * std::cos(t), m * std::sin(t));
}

double chain_cap(double remaining, double weight) {
  return remaining <= 0.0 ? 0.0 : std::sqrt(remaining / weight);
}

// One attempted draw. The number of RNG calls is fixed per scenario, so a
// rejected attempt perturbs nothing downstream.
bool draw_window(std::mt19937_64& rng, Scenario s, GrunskyWindow& out) {
  Cx free_coeffs[3];
  std::size_t arity = 3;
  switch (s) {
    case Scenario::kA2Zero: {
      Cx w13 = draw_coefficient(rng, 0.5);
      double rem = 1.0 - 3.0 * std::norm(w13);
      Cx w15 = draw_coefficient(rng, chain_cap(rem, 5.0));
      rem -= 5.0 * std::norm(w15);
      Cx w17 = draw_coefficient(rng, chain_cap(rem, 7.0));
      free_coeffs[0] = w13; free_coeffs[1] = w15; free_coeffs[2] = w17;
      break;
    }
    case Scenario::kA3Zero: {
      Cx w11 = draw_coefficient(rng, 0.5);
      double n11 = std::norm(w11);
      double rem = 1.0 - n11 - 6.75 * n11 * n11;  // |w13|^2 = (9/4)|w11|^4
      Cx w15 = draw_coefficient(rng, chain_cap(rem, 5.0));
      rem -= 5.0 * std::norm(w15);
      Cx w17 = draw_coefficient(rng, chain_cap(rem, 7.0));
      free_coeffs[0] = w11; free_coeffs[1] = w15; free_coeffs[2] = w17;
      break;
    }
    case Scenario::kUnconstrained: {
      Cx w11 = draw_coefficient(rng, 1.0);
      double rem = 1.0 - std::norm(w11);
      Cx w13 = draw_coefficient(rng, chain_cap(rem, 3.0));
      rem -= 3.0 * std::norm(w13);
      Cx w15 = draw_coefficient(rng, chain_cap(rem, 5.0));
      free_coeffs[0] = w11; free_coeffs[1] = w13; free_coeffs[2] = w15;
      break;
    }
    case Scenario::kOddA5A3: {
      Cx w13 = draw_coefficient(rng, 0.5);
      double rem = 1.0 - 3.0 * std::norm(w13);
      Cx w17 = draw_coefficient(rng, chain_cap(rem, 7.0));
      free_coeffs[0] = w13; free_coeffs[1] = w17;
      arity = 2;
      break;
    }
  }
  out = complete_window(std::span<const Cx>(free_coeffs, arity), s);
  for (double m : feasibility_margins(out))
    if (m < 0.0) return false;
  return true;
}

struct CheckSpec {
  const char* objective;
  const char* bound_id;
  double (*value)(const ObjectiveValues&);
};

std::vector<CheckSpec> scenario_checks(Scenario s) {
  switch (s) {
    case Scenario::kA2Zero:
      return {{"abs_a5", "a5_a2zero", [](const ObjectiveValues& o) { return o.abs_a5; }},
              {"h3", "f1", [](const ObjectiveValues& o) { return o.h3; }}};
    case Scenario::kA3Zero:
      return {{"abs_a4", "f2", [](const ObjectiveValues& o) { return o.abs_a4; }},
              {"abs_a5", "f3", [](const ObjectiveValues& o) { return o.abs_a5; }},
              {"h2", "f4", [](const ObjectiveValues& o) { return o.h2; }},
              {"h3", "f5", [](const ObjectiveValues& o) { return o.h3; }}};
    case Scenario::kUnconstrained:
      return {{"a4_minus_a3", "f6", [](const ObjectiveValues& o) { return o.a4_minus_a3; }}};
    case Scenario::kOddA5A3:
      return {{"a5_minus_a3", "a5_minus_a3_odd",
               [](const ObjectiveValues& o) { return o.a5_minus_a3; }}};
  }
  return {};
}

// Certified bounds backing the violation checks, computed once per bound id
// at that entry's own enclosure tolerance.
double certified_bound_hi(const std::string& bound_id) {
  static std::mutex mu;
  static std::map<std::string, double> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bound_id);
  if (it != cache.end()) return it->second;
  const BoundProblem* p = find_bound(bound_id);
  if (!p) throw std::logic_error("unknown bound id: " + bound_id);
  OptimizerConfig cfg;
  cfg.tolerance = p->enclosure_tolerance;
  double hi = maximize(*p, cfg).max_hi;
  cache.emplace(bound_id, hi);
  return hi;
}

struct ShardResult {
  std::vector<double> observed_max;
  std::vector<GrunskyWindow> argmax_window;
  std::vector<std::uint64_t> violations;
  std::uint64_t attempts = 0;
  bool rejection_budget_hit = false;
};

ShardResult run_shard(Scenario s, std::uint64_t seed, std::uint64_t shard,
                      std::uint64_t quota, const std::vector<CheckSpec>& specs,
                      const std::vector<double>& bound_hi, double margin) {
  ShardResult r;
  r.observed_max.assign(specs.size(), -std::numeric_limits<double>::infinity());
  r.argmax_window.resize(specs.size());
  r.violations.assign(specs.size(), 0);
  std::mt19937_64 rng(shard_seed(seed, shard));
  std::uint64_t accepted = 0;
  GrunskyWindow w;
  while (accepted < quota) {
    ++r.attempts;
    if (r.attempts > 4096 &&
        static_cast<double>(accepted) < kMinAcceptance * static_cast<double>(r.attempts)) {
      r.rejection_budget_hit = true;
      return r;
    }
    if (!draw_window(rng, s, w)) continue;
    ++accepted;
    ObjectiveValues o = objectives(w);
    for (std::size_t k = 0; k < specs.size(); ++k) {
      double v = specs[k].value(o);
      if (v > r.observed_max[k]) {
        r.observed_max[k] = v;
        r.argmax_window[k] = w;
      }
      if (v > bound_hi[k] + margin) ++r.violations[k];
    }
  }
  return r;
}

}  // namespace

SampleReport sample(Scenario s, const SampleConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("sample: n must be at least 1");

  std::vector<CheckSpec> specs = scenario_checks(s);
  std::vector<double> bound_hi(specs.size());
  for (std::size_t k = 0; k < specs.size(); ++k)
    bound_hi[k] = certified_bound_hi(specs[k].bound_id);

  std::uint64_t shards = (cfg.n + kShardSize - 1) / kShardSize;
  std::vector<ShardResult> results(shards);

  int nthreads = cfg.threads;
#ifdef _OPENMP
  if (nthreads <= 0) nthreads = omp_get_max_threads();
#else
  nthreads = 1;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (std::uint64_t j = 0; j < shards; ++j) {  // NOLINT
    std::uint64_t quota = std::min<std::uint64_t>(kShardSize, cfg.n - j * kShardSize);
    results[j] = run_shard(s, cfg.seed, j, quota, specs, bound_hi, cfg.soundness_margin);
  }

  SampleReport rep;
  rep.scenario = s;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  rep.checks.resize(specs.size());
  for (std::size_t k = 0; k < specs.size(); ++k) {
    rep.checks[k].objective = specs[k].objective;
    rep.checks[k].bound_id = specs[k].bound_id;
    rep.checks[k].bound_hi = bound_hi[k];
    rep.checks[k].observed_max = -std::numeric_limits<double>::infinity();
  }
  bool budget_hit = false;
  for (const ShardResult& r : results) {
    rep.attempts += r.attempts;
    budget_hit = budget_hit || r.rejection_budget_hit;
    for (std::size_t k = 0; k < specs.size(); ++k) {
      rep.checks[k].violations += r.violations[k];
      if (r.observed_max[k] > rep.checks[k].observed_max) {
        rep.checks[k].observed_max = r.observed_max[k];
        rep.checks[k].argmax_window = r.argmax_window[k];
      }
    }
  }
  if (budget_hit)
    throw RejectionBudgetError(std::string(scenario_name(s)) +
                               ": acceptance rate fell below 1e-4");
  rep.acceptance_rate = static_cast<double>(cfg.n) / static_cast<double>(rep.attempts);
  return rep;
}

SampleReport sample(Scenario s, std::uint64_t n, std::uint64_t seed) {
  SampleConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  return sample(s, cfg);
}

}  // namespace certbounds
