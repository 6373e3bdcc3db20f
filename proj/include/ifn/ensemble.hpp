#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ifn/construct.hpp"
#include "ifn/types.hpp"

namespace ifn {

/// Network construction method.
enum class Method {
  mst_prim,
  mst_kruskal,
  pmfg,
  tmfg,
  mfcf,
};

/// End-to-end recipe from raw data to a filtered network: sample covariance
/// (optionally shrunk), correlation, squared correlations as edge weights,
/// then the selected constructor.  `gain` and `mfcf` apply only to the mfcf
/// method (correlation-based gains read the correlation matrix).
struct BuildRecipe {
  Method method = Method::tmfg;
  GainKind gain = GainKind::edge_weight;
  MfcfConfig mfcf;
  double shrinkage = 0.0;
  /// When set, each replica draws floor(fraction * n) distinct rows without
  /// replacement instead of n rows with replacement; in (0, 1].
  std::optional<double> subsample_fraction;
};

/// Applies a recipe to a dataset (no resampling).
FilteredGraph build_network(const DataMatrix& data, const BuildRecipe& recipe);

/// Edge occurrence counts over bootstrap replicas.
struct EdgeEnsemble {
  int p = 0;
  int replicas = 0;
  std::uint64_t master_seed = 0;
  BuildRecipe recipe;
  std::vector<std::string> names;
  /// Canonical (u, v) -> number of replicas whose network contains the edge.
  std::map<std::pair<int, int>, int> frequencies;
};

/// Builds `replicas` bootstrap networks; replica k resamples the rows with a
/// generator seeded master_seed + k (mod 2^64) and applies the recipe.  A
/// resample with a zero-variance column is re-drawn with the next derived
/// seed, at most 10 attempts, then raises degenerate_variable_error naming
/// the replica and column.  Replicas run in parallel; counts are merged in
/// replica order, so the result is identical across thread counts and
/// matches the serial variant bit for bit.
EdgeEnsemble bootstrap_ensemble(const DataMatrix& data, int replicas, const BuildRecipe& recipe,
                                std::uint64_t master_seed);

/// Plain sequential reference implementation of bootstrap_ensemble.
EdgeEnsemble bootstrap_ensemble_serial(const DataMatrix& data, int replicas,
                                       const BuildRecipe& recipe, std::uint64_t master_seed);

/// Probability of seeing `frequency` or more occurrences of an edge in `r`
/// replicas under the null that each replica picks its edges uniformly at
/// random from the m = p(p-1)/2 candidate pairs:
///   sum_{k=f}^{r} C(r, k) * C(m - r, r - k) / C(m, r),
/// evaluated in log-gamma space.  Requires 0 <= f <= r and m >= r.
double edge_pvalue(int frequency, int replicas, int p);

/// Edges whose p-value is <= alpha, weighted by frequency / replicas.
FilteredGraph validated_network(const EdgeEnsemble& ensemble, double alpha);

struct MergeReport {
  FilteredGraph graph;
  bool chordal = false;
  bool planar = false;
};

/// Validated network plus its chordality and planarity flags.
MergeReport merge_report(const EdgeEnsemble& ensemble, double alpha);

}  // namespace ifn
