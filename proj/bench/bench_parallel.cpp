// Timing comparison between the parallel kernels and their serial reference
// implementations: clique-local precision assembly and bootstrap ensembles.
// Both pairs must produce identical results; this binary reports wall-clock
// times and verifies agreement on the fly.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include "ifn/construct.hpp"
#include "ifn/ensemble.hpp"
#include "ifn/logo.hpp"
#include "ifn/stats.hpp"
#include "ifn/types.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ifn::DataMatrix make_bench_data(int n, int p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ifn::Matrix x(n, p);
  for (int i = 0; i < n; ++i) {
    const double common = normal(rng);
    for (int j = 0; j < p; ++j) x(i, j) = 0.4 * common + normal(rng);
  }
  return ifn::DataMatrix(std::move(x));
}

template <typename F>
double timed(const std::string& label, F&& f) {
  const auto start = Clock::now();
  f();
  const double elapsed = seconds_since(start);
  std::cout << "  " << label << ": " << elapsed << " s\n";
  return elapsed;
}

}  // namespace

int main() {
  std::cout << "precision assembly (n=400, p=120, tmfg tree)\n";
  {
    const ifn::DataMatrix data = make_bench_data(400, 120, 1);
    const ifn::WeightMatrix cov = ifn::estimate_covariance(data);
    const ifn::WeightMatrix corr = ifn::covariance_to_correlation(cov);
    const ifn::WeightMatrix w = ifn::squared_correlation(corr);
    const ifn::TmfgResult net = ifn::tmfg(w);

    ifn::SparsePrecision parallel(1, {});
    ifn::SparsePrecision serial(1, {});
    const double tp = timed("parallel", [&] { parallel = ifn::logo_precision(cov, net.tree); });
    const double ts = timed("serial  ", [&] { serial = ifn::logo_precision_serial(cov, net.tree); });
    std::cout << "  identical: " << (parallel == serial ? "yes" : "NO") << ", speedup "
              << ts / tp << "x\n";
  }

  std::cout << "bootstrap ensemble (n=250, p=40, tmfg, 64 replicas)\n";
  {
    const ifn::DataMatrix data = make_bench_data(250, 40, 2);
    ifn::BuildRecipe recipe;
    recipe.method = ifn::Method::tmfg;

    ifn::EdgeEnsemble parallel;
    ifn::EdgeEnsemble serial;
    const double tp =
        timed("parallel", [&] { parallel = ifn::bootstrap_ensemble(data, 64, recipe, 7); });
    const double ts = timed("serial  ", [&] {
      serial = ifn::bootstrap_ensemble_serial(data, 64, recipe, 7);
    });
    const bool same = parallel.frequencies == serial.frequencies;
    std::cout << "  identical: " << (same ? "yes" : "NO") << ", speedup " << ts / tp << "x\n";
  }
  return 0;
}
