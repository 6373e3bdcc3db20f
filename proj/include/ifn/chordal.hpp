#pragma once

#include <optional>
#include <vector>

#include "ifn/types.hpp"

namespace ifn {

/// Result of the chordality test.  When `chordal` is true, `ordering` holds a
/// perfect elimination ordering (first vertex to eliminate first): for each
/// vertex, its not-yet-eliminated neighbors form a clique.
struct Chordality {
  bool chordal = false;
  std::optional<std::vector<int>> ordering;
};

/// Maximum-cardinality search producing a candidate elimination ordering,
/// followed by a fill-in check of that ordering.
Chordality is_chordal(const FilteredGraph& g);

/// Maximal cliques and a valid junction forest (running-intersection
/// property) of a chordal graph.  Cliques are listed in lexicographic order
/// of their sorted member lists; each tree component is rooted at its
/// lowest-index clique and separators are listed sorted by (parent, child).
/// Throws not_chordal_error when `g` is not chordal.
CliqueTree extract_clique_tree(const FilteredGraph& g);

}  // namespace ifn
