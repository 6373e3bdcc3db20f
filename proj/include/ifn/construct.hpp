#pragma once

#include <optional>

#include "ifn/gain.hpp"
#include "ifn/types.hpp"

namespace ifn {

/// Maximum spanning tree grown from vertex 0, always attaching the
/// highest-weight crossing edge.  Requires p >= 2 and strictly positive
/// off-diagonal weights.  Ties break toward the lexicographically smallest
/// (new vertex, tree partner).
FilteredGraph mst_prim(const WeightMatrix& w);

/// Maximum spanning tree built by scanning all candidate edges in descending
/// weight order and keeping those joining distinct components.  Same
/// preconditions and tie rules (descending weight, then ascending (u, v)).
FilteredGraph mst_kruskal(const WeightMatrix& w);

/// Maximal planar subgraph built greedily: all candidate edges sorted by
/// descending weight, each inserted when the graph stays planar, until
/// 3p - 6 edges are present.  Requires p >= 3 and positive off-diagonal
/// weights.
FilteredGraph pmfg(const WeightMatrix& w);

struct TmfgResult {
  FilteredGraph graph;
  CliqueTree tree;  // insertion history: tetrahedra as cliques, used faces as separators
};

/// Triangulated maximal planar graph grown by vertex-into-triangle
/// insertion.  Seeds with the triangle of maximum total weight; each step
/// inserts the vertex v maximizing w(v,t1) + w(v,t2) + w(v,t3) over active
/// face triangles (t1,t2,t3), replacing the used face with three new ones.
/// The seed face is consumed by the first insertion.  Output is planar and
/// chordal with 3p - 6 edges.  Requires p >= 3 and positive off-diagonal
/// weights.
TmfgResult tmfg(const WeightMatrix& w);

/// Seed construction rule for clique-expansion building.
enum class MfcfSeedRule {
  /// Grow the seed from the highest-weight edge, repeatedly attaching the
  /// highest-gain vertex, until it has min_clique members.
  best_edge_expand,
  /// Seed exactly as tmfg() does: maximum-total-weight triangle plus the
  /// best fourth vertex, with the seed triangle marked spent.  Requires
  /// min_clique == max_clique == 4.
  tmfg_triangle,
};

struct MfcfConfig {
  int min_clique = 4;
  int max_clique = 4;
  /// Maximum number of attachments through any one separator member-set;
  /// unset means unbounded.
  std::optional<long long> max_multiplicity = 1;
  /// When set, a best gain below this threshold starts a new component from
  /// a fresh seed instead of attaching.
  std::optional<double> gain_threshold;
  MfcfSeedRule seed_rule = MfcfSeedRule::best_edge_expand;
};

struct MfcfResult {
  FilteredGraph graph;
  CliqueTree tree;
  /// Sum of the gains of every expansion step, including seed growth (the
  /// initial edge counts as joining two singletons).
  double total_gain = 0.0;
};

/// Maximally filtered clique forest: repeatedly attach the vertex/sub-clique
/// pair of maximum gain, where the sub-clique s satisfies
/// min_clique - 1 <= |s| <= max_clique - 1, s lies inside an existing
/// clique, and its member-set usage counter is below max_multiplicity.
/// Attaching through s == c absorbs the clique (it grows in place);
/// otherwise s becomes a separator and its counter increments.  Ties break
/// toward the lexicographically smallest (vertex, member-set) pair.
MfcfResult mfcf(const WeightMatrix& w, const GainSpec& gain, const MfcfConfig& cfg);

}  // namespace ifn
