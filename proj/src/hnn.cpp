#include "ifn/hnn.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ifn/errors.hpp"
#include "ifn/simplices.hpp"

namespace ifn {

HnnSpec export_hnn(const FilteredGraph& g, HnnMode mode, int max_dimension) {
  if (max_dimension < 1) {
    throw invalid_input_error("hnn export needs max_dimension >= 1, got " +
                              std::to_string(max_dimension));
  }
  if (g.edge_count() == 0) {
    throw invalid_input_error("hnn export needs a graph with at least one edge");
  }

  const SimplexSet simplices = enumerate_simplices(g, max_dimension);
  int top_dimension = 0;
  for (int d = 0; d <= max_dimension; ++d) {
    if (simplices.count(d) > 0) top_dimension = d;
  }

  HnnSpec spec;
  spec.p = g.p();
  spec.mode = mode;
  spec.max_dimension = max_dimension;

  // Simplex nodes in (layer, members) order; the final node goes last.
  std::map<std::vector<int>, int> index_of;
  const auto add_node = [&spec, &index_of](std::vector<int> members, int layer) {
    index_of.emplace(members, static_cast<int>(spec.nodes.size()));
    spec.nodes.push_back(HnnNode{std::move(members), layer, std::string()});
  };

  if (mode == HnnMode::layered) {
    for (int d = 0; d <= top_dimension; ++d) {
      for (const auto& members : simplices.by_dimension[static_cast<std::size_t>(d)]) {
        add_node(members, d);
      }
    }
    spec.final_node = static_cast<int>(spec.nodes.size());
    spec.nodes.push_back(HnnNode{{}, top_dimension + 1, std::string()});

    // sigma -> tau whenever tau extends sigma by one vertex; simplices that
    // extend to nothing are maximal and feed the final node instead.
    std::vector<int> out_degree(spec.nodes.size(), 0);
    for (int d = 1; d <= top_dimension; ++d) {
      for (const auto& members : simplices.by_dimension[static_cast<std::size_t>(d)]) {
        const int target = index_of.at(members);
        std::vector<int> facet(members.size() - 1);
        for (std::size_t skip = 0; skip < members.size(); ++skip) {
          std::size_t out = 0;
          for (std::size_t i = 0; i < members.size(); ++i) {
            if (i != skip) facet[out++] = members[i];
          }
          const int source = index_of.at(facet);
          spec.edges.emplace_back(source, target);
          ++out_degree[static_cast<std::size_t>(source)];
        }
      }
    }
    for (int node = 0; node < spec.final_node; ++node) {
      if (out_degree[static_cast<std::size_t>(node)] == 0) {
        spec.edges.emplace_back(node, spec.final_node);
      }
    }
  } else {
    for (int v = 0; v < g.p(); ++v) add_node({v}, 0);
    std::vector<std::vector<int>> pooled;
    for (int d = 1; d <= top_dimension; ++d) {
      const auto& level = simplices.by_dimension[static_cast<std::size_t>(d)];
      pooled.insert(pooled.end(), level.begin(), level.end());
    }
    std::sort(pooled.begin(), pooled.end());
    for (auto& members : pooled) add_node(std::move(members), 1);
    spec.final_node = static_cast<int>(spec.nodes.size());
    spec.nodes.push_back(HnnNode{{}, 2, std::string()});

    // Every higher simplex reads straight from its member vertices and feeds
    // the final node; vertex nodes never touch the final node directly.
    for (int node = g.p(); node < spec.final_node; ++node) {
      for (int v : spec.nodes[static_cast<std::size_t>(node)].members) {
        spec.edges.emplace_back(v, node);
      }
      spec.edges.emplace_back(node, spec.final_node);
    }
  }

  std::sort(spec.edges.begin(), spec.edges.end());
  return spec;
}

}  // namespace ifn
