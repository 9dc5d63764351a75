// Compares the round-based OpenMP engine against the serial reference
// search and checks that the engine's enclosure is identical for every
// worker count.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "certbounds/optimizer.hpp"
#include "certbounds/report.hpp"
#include "certbounds/sampler.hpp"

using namespace certbounds;

namespace {

double time_seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_enclosure(const Enclosure& a, const Enclosure& b) {
  return a.max_lo == b.max_lo && a.max_hi == b.max_hi &&
         a.boxes_processed == b.boxes_processed && a.witness == b.witness;
}

void bench_optimizer(const std::string& id, double tol) {
  const BoundProblem* p = find_bound(id);
  OptimizerConfig serial_cfg;
  serial_cfg.tolerance = tol;
  serial_cfg.threads = 1;
  OptimizerConfig parallel_cfg = serial_cfg;
  parallel_cfg.threads = 0;

  Enclosure ref, eng1, engN;
  double t_ref = time_seconds([&] { ref = maximize_reference(*p, serial_cfg); });
  double t_1 = time_seconds([&] { eng1 = maximize(*p, serial_cfg); });
  double t_n = time_seconds([&] { engN = maximize(*p, parallel_cfg); });

  std::printf("%-14s tol=%-8.1e reference %8.3fs (%8llu boxes) | engine x1 %8.3fs "
              "(%8llu boxes) | engine xN %8.3fs  identical=%s\n",
              id.c_str(), tol, t_ref, static_cast<unsigned long long>(ref.boxes_processed),
              t_1, static_cast<unsigned long long>(eng1.boxes_processed), t_n,
              same_enclosure(eng1, engN) ? "yes" : "NO");
  std::printf("%-14s enclosure [%s, %s]\n", "", format_double(eng1.max_lo).c_str(),
              format_double(eng1.max_hi).c_str());
}

void bench_sampler(Scenario s, std::uint64_t n) {
  SampleConfig one;
  one.n = n;
  one.threads = 1;
  SampleConfig many = one;
  many.threads = 0;

  SampleReport r1, rn;
  double t_1 = time_seconds([&] { r1 = sample(s, one); });
  double t_n = time_seconds([&] { rn = sample(s, many); });
  bool same = render_sample_text(r1) == render_sample_text(rn);
  std::printf("sampler %-18s n=%llu  x1 %8.3fs | xN %8.3fs  identical=%s\n",
              scenario_name(s), static_cast<unsigned long long>(n), t_1, t_n,
              same ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif
  bench_optimizer("f1", 1e-9);
  bench_optimizer("f3", 1e-10);
  bench_optimizer("f6", 1e-9);
  bench_optimizer("f6", 1e-12);
  bench_sampler(Scenario::kUnconstrained, 1u << 20);
  bench_sampler(Scenario::kA2Zero, 1u << 20);
  return 0;
}
