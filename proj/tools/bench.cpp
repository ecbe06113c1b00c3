// Serial vs OpenMP timing for the two parallel kernels: the batch experiment
// runner and the grid-oracle scan.
#include <omp.h>

#include <cstdio>
#include <vector>

#include "optfprl/harness.hpp"

using namespace optfprl;

namespace {

double time_batch(const std::vector<RunConfig>& configs, bool parallel) {
  const double t0 = omp_get_wtime();
  const std::vector<RunResult> results = run_batch(configs, parallel);
  const double t1 = omp_get_wtime();
  double sink = 0.0;
  for (const RunResult& r : results) sink += r.report.regret_cum;
  std::printf("    (checksum %.6g)\n", sink);
  return t1 - t0;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  {
    std::printf("batch: 6 scenarios x {optfprl,ftrl,ogd}, T=5000, d=16\n");
    std::vector<RunConfig> configs;
    for (int id = 1; id <= 6; ++id)
      for (Algo algo : {Algo::optfprl, Algo::ftrl_adaptive, Algo::ogd_adaptive}) {
        RunConfig cfg;
        cfg.scenario = make_scenario(id);
        cfg.algo = algo;
        configs.push_back(cfg);
      }
    const double serial = time_batch(configs, false);
    const double parallel = time_batch(configs, true);
    std::printf("  serial   %8.3f s\n  openmp   %8.3f s\n  speedup  %8.2fx\n\n", serial,
                parallel, serial / parallel);
  }

  {
    std::printf("batch: 64 random instances, T=2000, d=16, all schedules\n");
    std::vector<RunConfig> configs;
    for (int i = 0; i < 64; ++i) {
      RandomInstanceConfig icfg;
      icfg.seed = 100 + i;
      icfg.horizon = 2000;
      icfg.dim = 16;
      icfg.pred_mode = i % 2 ? PredictionMode::noisy : PredictionMode::zero;
      icfg.noise_scale = 0.5;
      RunConfig cfg;
      cfg.scenario = make_random_scenario(icfg);
      cfg.algo = Algo::optfprl;
      cfg.strategy.kind = static_cast<Strategy>(i % 4);
      configs.push_back(cfg);
    }
    const double serial = time_batch(configs, false);
    const double parallel = time_batch(configs, true);
    std::printf("  serial   %8.3f s\n  openmp   %8.3f s\n  speedup  %8.2fx\n\n", serial,
                parallel, serial / parallel);
  }

  {
    std::printf("grid-oracle scan: d=2 ball R=2, resolution 5e-4, 8 objectives\n");
    const FeasibleSet set = FeasibleSet::ball(2, 2.0);
    double serial = 0.0, parallel = 0.0, sink = 0.0;
    for (int k = 0; k < 8; ++k) {
      const Vec q{1.0 + 0.25 * k, -0.5 * k};
      const double sigma = 0.25 * (k + 1);
      const auto objective = [&](const Vec& x) { return dot(q, x) + 0.5 * sigma * sq_norm(x); };
      double t0 = omp_get_wtime();
      const Vec a = grid_argmin_oracle(objective, set, 5e-4, false);
      double t1 = omp_get_wtime();
      const Vec b = grid_argmin_oracle(objective, set, 5e-4, true);
      double t2 = omp_get_wtime();
      serial += t1 - t0;
      parallel += t2 - t1;
      sink += dist(a, b);  // identical scans
    }
    std::printf("    (serial/openmp result distance %.3g)\n", sink);
    std::printf("  serial   %8.3f s\n  openmp   %8.3f s\n  speedup  %8.2fx\n", serial, parallel,
                serial / parallel);
  }
  return 0;
}
