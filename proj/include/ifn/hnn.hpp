#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ifn/types.hpp"

namespace ifn {

/// Wiring scheme of the exported network architecture.
enum class HnnMode {
  /// Nodes graded by simplex dimension; an edge runs from each simplex to
  /// every enumerated simplex one dimension higher that contains it, and
  /// maximal simplices feed the final node.
  layered,
  /// Every simplex of dimension >= 1 reads directly from its member vertices
  /// and feeds the final node.
  flat,
};

struct HnnNode {
  std::vector<int> members;  // sorted vertex indices; empty for the final node
  int layer = 0;
  /// Free-form slot for unit semantics; the exporter leaves it empty (the
  /// document carries structure only).
  std::string annotation;

  friend bool operator==(const HnnNode& a, const HnnNode& b) {
    return a.members == b.members && a.layer == b.layer && a.annotation == b.annotation;
  }
};

/// Network architecture derived from a graph's clique complex: one node per
/// simplex up to max_dimension (inputs are the vertices), plus a final
/// aggregation node, wired per HnnMode.  Nodes are ordered by (layer,
/// members); edges are (source index, target index), sorted.
struct HnnSpec {
  int p = 0;
  HnnMode mode = HnnMode::layered;
  int max_dimension = 1;
  std::vector<HnnNode> nodes;
  std::vector<std::pair<int, int>> edges;
  int final_node = 0;  // index into nodes

  friend bool operator==(const HnnSpec& a, const HnnSpec& b) {
    return a.p == b.p && a.mode == b.mode && a.max_dimension == b.max_dimension &&
           a.nodes == b.nodes && a.edges == b.edges && a.final_node == b.final_node;
  }
};

/// Exports the architecture of `g`.  Requires max_dimension >= 1 and a graph
/// with at least one edge (invalid_input_error otherwise).
HnnSpec export_hnn(const FilteredGraph& g, HnnMode mode, int max_dimension);

}  // namespace ifn
