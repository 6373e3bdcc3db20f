#include "ifn/simplices.hpp"

#include <algorithm>
#include <string>

namespace ifn {

SimplexSet enumerate_simplices(const FilteredGraph& g, int max_dimension) {
  if (max_dimension < 0) {
    throw invalid_input_error("max_dimension must be >= 0, got " + std::to_string(max_dimension));
  }
  const int p = g.p();
  SimplexSet s;
  s.p = p;
  s.by_dimension.resize(static_cast<std::size_t>(max_dimension) + 1);

  auto& vertices = s.by_dimension[0];
  vertices.reserve(static_cast<std::size_t>(p));
  for (int v = 0; v < p; ++v) vertices.push_back({v});

  // Grow each (d-1)-simplex by a common neighbor above its maximum member;
  // every complete subgraph is enumerated exactly once, in lexicographic
  // order, and downward closure holds because subsets of complete subgraphs
  // are complete.
  for (int dim = 1; dim <= max_dimension; ++dim) {
    const auto& prev = s.by_dimension[static_cast<std::size_t>(dim) - 1];
    auto& cur = s.by_dimension[static_cast<std::size_t>(dim)];
    for (const auto& base : prev) {
      for (int v = base.back() + 1; v < p; ++v) {
        bool complete = true;
        for (int u : base) {
          if (!g.has_edge(u, v)) {
            complete = false;
            break;
          }
        }
        if (complete) {
          std::vector<int> extended = base;
          extended.push_back(v);
          cur.push_back(std::move(extended));
        }
      }
    }
  }
  return s;
}

}  // namespace ifn
