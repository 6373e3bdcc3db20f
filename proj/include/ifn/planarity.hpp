#pragma once

#include <utility>
#include <vector>

#include "ifn/types.hpp"

namespace ifn {

/// True when the graph admits a planar embedding (equivalently, by
/// Kuratowski's theorem, contains no subdivision of K5 or K3,3).
bool is_planar(const FilteredGraph& g);

/// Low-level variant on a raw edge list (endpoints in [0, p), no validation
/// beyond range).  Used by greedy planar construction to test candidate
/// insertions without materializing a graph per probe.
bool is_planar(int p, const std::vector<std::pair<int, int>>& edges);

}  // namespace ifn
