#include "ifn/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace ifn {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>>;

}  // namespace

bool is_planar(int p, const std::vector<std::pair<int, int>>& edges) {
  // Euler bound: a simple planar graph has at most 3p - 6 edges (p >= 3).
  if (p >= 3 && edges.size() > static_cast<std::size_t>(3 * p - 6)) return false;
  if (p < 5 || edges.size() < 9) return true;  // too small to contain K5 or K3,3
  BoostGraph g(static_cast<std::size_t>(p));
  for (const auto& [u, v] : edges) {
    boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), g);
  }
  return boost::boyer_myrvold_planarity_test(g);
}

bool is_planar(const FilteredGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return is_planar(g.p(), edges);
}

}  // namespace ifn
