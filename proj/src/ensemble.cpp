#include "ifn/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "ifn/chordal.hpp"
#include "ifn/planarity.hpp"
#include "ifn/stats.hpp"

namespace ifn {
namespace {

// Odd constant decorrelating redraw attempts from plain replica seeds.
constexpr std::uint64_t redraw_stride = 0x9E3779B97F4A7C15ULL;
constexpr int max_redraws = 10;

/// Deterministic bounded draw: the generator's 64-bit output mapped to
/// [0, bound) by a 128-bit multiply-shift.  std::uniform_int_distribution is
/// implementation-defined, so it cannot be used where byte-identical results
/// across toolchains are required.
std::size_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::size_t>(
      static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64));
}

void validate_recipe(const DataMatrix& data, const BuildRecipe& recipe) {
  if (recipe.subsample_fraction) {
    const double f = *recipe.subsample_fraction;
    if (!(f > 0.0) || f > 1.0) {
      throw config_error("subsample fraction must lie in (0, 1], got " + std::to_string(f));
    }
    if (static_cast<int>(std::floor(f * data.n())) < 2) {
      throw config_error("subsample fraction " + std::to_string(f) + " keeps fewer than 2 of " +
                         std::to_string(data.n()) + " rows");
    }
  }
}

/// Rows for one replica: n with replacement (bootstrap) or floor(f * n)
/// distinct rows (subsample), drawn with the replica generator.
std::vector<std::size_t> draw_rows(std::mt19937_64& rng, int n,
                                   const std::optional<double>& fraction) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::size_t> rows;
  if (!fraction) {
    rows.resize(nn);
    for (std::size_t i = 0; i < nn; ++i) rows[i] = bounded_draw(rng, nn);
    return rows;
  }
  const auto m = static_cast<std::size_t>(std::floor(*fraction * n));
  std::vector<std::size_t> pool(nn);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + bounded_draw(rng, nn - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  return pool;
}

/// Column index with zero variance in the resampled rows, or -1.
int degenerate_column(const Matrix& x, const std::vector<std::size_t>& rows) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double first = x(static_cast<Eigen::Index>(rows.front()), j);
    bool constant = true;
    for (std::size_t r : rows) {
      if (x(static_cast<Eigen::Index>(r), j) != first) {
        constant = false;
        break;
      }
    }
    if (constant) return static_cast<int>(j);
  }
  return -1;
}

/// Edge set of the network built on one replica's resample.
std::vector<std::pair<int, int>> replica_edges(const DataMatrix& data, const BuildRecipe& recipe,
                                               std::uint64_t master_seed, int k) {
  const Matrix& x = data.values();
  std::vector<std::size_t> rows;
  int bad_column = -1;
  bool drawn = false;
  for (int attempt = 0; attempt < max_redraws; ++attempt) {
    const std::uint64_t seed =
        master_seed + static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(attempt) * redraw_stride;
    std::mt19937_64 rng(seed);
    rows = draw_rows(rng, data.n(), recipe.subsample_fraction);
    bad_column = degenerate_column(x, rows);
    if (bad_column < 0) {
      drawn = true;
      break;
    }
  }
  if (!drawn) {
    throw degenerate_variable_error("replica " + std::to_string(k) + ": column '" +
                                    data.name(bad_column) + "' has zero variance after " +
                                    std::to_string(max_redraws) + " resampling attempts");
  }

  Matrix resampled(static_cast<Eigen::Index>(rows.size()), x.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    resampled.row(static_cast<Eigen::Index>(i)) = x.row(static_cast<Eigen::Index>(rows[i]));
  }
  const FilteredGraph g = build_network(DataMatrix(std::move(resampled), data.names()), recipe);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return edges;
}

EdgeEnsemble make_ensemble_shell(const DataMatrix& data, int replicas, const BuildRecipe& recipe,
                                 std::uint64_t master_seed) {
  if (replicas < 1) {
    throw config_error("ensemble needs at least one replica, got " + std::to_string(replicas));
  }
  validate_recipe(data, recipe);
  EdgeEnsemble ens;
  ens.p = data.p();
  ens.replicas = replicas;
  ens.master_seed = master_seed;
  ens.recipe = recipe;
  ens.names = data.names();
  return ens;
}

}  // namespace

FilteredGraph build_network(const DataMatrix& data, const BuildRecipe& recipe) {
  const WeightMatrix cov = estimate_covariance(data, recipe.shrinkage);
  const WeightMatrix corr = covariance_to_correlation(cov);
  const WeightMatrix w = squared_correlation(corr);
  switch (recipe.method) {
    case Method::mst_prim:
      return mst_prim(w);
    case Method::mst_kruskal:
      return mst_kruskal(w);
    case Method::pmfg:
      return pmfg(w);
    case Method::tmfg:
      return tmfg(w).graph;
    case Method::mfcf: {
      GainSpec gain = GainSpec::edge_weight();
      if (recipe.gain == GainKind::sum_squared_correlation) {
        gain = GainSpec::sum_squared_correlation(corr);
      } else if (recipe.gain == GainKind::elliptical_mi) {
        gain = GainSpec::elliptical_mi(corr);
      }
      return mfcf(w, gain, recipe.mfcf).graph;
    }
  }
  throw config_error("unknown construction method");
}

EdgeEnsemble bootstrap_ensemble_serial(const DataMatrix& data, int replicas,
                                       const BuildRecipe& recipe, std::uint64_t master_seed) {
  EdgeEnsemble ens = make_ensemble_shell(data, replicas, recipe, master_seed);
  for (int k = 0; k < replicas; ++k) {
    for (const auto& edge : replica_edges(data, recipe, master_seed, k)) {
      ++ens.frequencies[edge];
    }
  }
  return ens;
}

EdgeEnsemble bootstrap_ensemble(const DataMatrix& data, int replicas, const BuildRecipe& recipe,
                                std::uint64_t master_seed) {
  EdgeEnsemble ens = make_ensemble_shell(data, replicas, recipe, master_seed);

  // Replicas are independent; run them concurrently and merge the counts in
  // replica order.  Counts are integer sums, so the merge order cannot change
  // the result — outputs are identical for any thread count.
  std::vector<std::vector<std::pair<int, int>>> per_replica(static_cast<std::size_t>(replicas));
  std::exception_ptr failure = nullptr;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (int k = 0; k < replicas; ++k) {
    try {
      per_replica[static_cast<std::size_t>(k)] = replica_edges(data, recipe, master_seed, k);
    } catch (...) {
#if defined(_OPENMP)
#pragma omp critical
#endif
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (int k = 0; k < replicas; ++k) {
    for (const auto& edge : per_replica[static_cast<std::size_t>(k)]) {
      ++ens.frequencies[edge];
    }
  }
  return ens;
}

double edge_pvalue(int frequency, int replicas, int p) {
  if (replicas < 1) {
    throw invalid_input_error("edge_pvalue needs at least one replica");
  }
  if (frequency < 0 || frequency > replicas) {
    throw invalid_input_error("frequency " + std::to_string(frequency) + " outside [0, " +
                              std::to_string(replicas) + "]");
  }
  const long long m = static_cast<long long>(p) * (p - 1) / 2;
  if (p < 2 || m < replicas) {
    throw invalid_input_error("edge_pvalue needs p(p-1)/2 >= replicas, got p=" + std::to_string(p) +
                              ", replicas=" + std::to_string(replicas));
  }

  // log C(n, k) via log-gamma; -inf for out-of-range k.
  const auto log_choose = [](long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
  };

  const double log_denominator = log_choose(m, replicas);
  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(replicas - frequency) + 1);
  double log_max = -std::numeric_limits<double>::infinity();
  for (int k = frequency; k <= replicas; ++k) {
    const double term =
        log_choose(replicas, k) + log_choose(m - replicas, replicas - k) - log_denominator;
    log_terms.push_back(term);
    log_max = std::max(log_max, term);
  }
  double sum = 0.0;
  for (double term : log_terms) sum += std::exp(term - log_max);
  return std::min(1.0, std::exp(log_max) * sum);
}

FilteredGraph validated_network(const EdgeEnsemble& ensemble, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw invalid_input_error("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  std::vector<Edge> edges;
  for (const auto& [pair, count] : ensemble.frequencies) {
    if (edge_pvalue(count, ensemble.replicas, ensemble.p) <= alpha) {
      edges.push_back(Edge{pair.first, pair.second,
                           static_cast<double>(count) / static_cast<double>(ensemble.replicas)});
    }
  }
  return FilteredGraph(ensemble.p, std::move(edges));
}

MergeReport merge_report(const EdgeEnsemble& ensemble, double alpha) {
  FilteredGraph g = validated_network(ensemble, alpha);
  const bool chordal = is_chordal(g).chordal;
  const bool planar = is_planar(g);
  return MergeReport{std::move(g), chordal, planar};
}

}  // namespace ifn
