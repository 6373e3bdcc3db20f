#include "ifn/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace ifn {
namespace {

/// Maximum-cardinality search visit order: always the unvisited vertex with
/// the most visited neighbors, ties to the smallest index.
std::vector<int> mcs_visit_order(const FilteredGraph& g) {
  const int p = g.p();
  const auto adj = g.adjacency();
  std::vector<int> weight(static_cast<std::size_t>(p), 0);
  std::vector<bool> visited(static_cast<std::size_t>(p), false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(p));
  for (int step = 0; step < p; ++step) {
    int best = -1;
    for (int v = 0; v < p; ++v) {
      if (visited[static_cast<std::size_t>(v)]) continue;
      if (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) {
        best = v;
      }
    }
    visited[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (int u : adj[static_cast<std::size_t>(best)]) {
      if (!visited[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
    }
  }
  return order;
}

}  // namespace

Chordality is_chordal(const FilteredGraph& g) {
  const int p = g.p();
  const auto visit = mcs_visit_order(g);

  // Eliminating in reverse visit order is perfect iff the graph is chordal.
  std::vector<int> elimination(visit.rbegin(), visit.rend());
  std::vector<int> position(static_cast<std::size_t>(p), 0);
  for (int i = 0; i < p; ++i) position[static_cast<std::size_t>(elimination[static_cast<std::size_t>(i)])] = i;
  const auto adj = g.adjacency();

  for (int i = 0; i < p; ++i) {
    const int v = elimination[static_cast<std::size_t>(i)];
    std::vector<int> later;
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (position[static_cast<std::size_t>(u)] > i) later.push_back(u);
    }
    // Fill-in check: the not-yet-eliminated neighbors must form a clique.
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.has_edge(later[a], later[b])) {
          return Chordality{false, std::nullopt};
        }
      }
    }
  }
  return Chordality{true, elimination};
}

CliqueTree extract_clique_tree(const FilteredGraph& g) {
  const auto chordality = is_chordal(g);
  if (!chordality.chordal) {
    throw not_chordal_error("graph is not chordal; no clique tree exists");
  }
  const int p = g.p();
  const auto& elimination = *chordality.ordering;
  std::vector<int> position(static_cast<std::size_t>(p), 0);
  for (int i = 0; i < p; ++i) position[static_cast<std::size_t>(elimination[static_cast<std::size_t>(i)])] = i;
  const auto adj = g.adjacency();

  // Candidate cliques: each vertex with its not-yet-eliminated neighbors.
  std::set<std::vector<int>> candidates;
  for (int v = 0; v < p; ++v) {
    std::vector<int> k{v};
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(v)]) k.push_back(u);
    }
    std::sort(k.begin(), k.end());
    candidates.insert(std::move(k));
  }

  // Keep the inclusion-maximal candidates, in lexicographic member order.
  std::vector<std::vector<int>> cliques;
  for (const auto& c : candidates) {
    bool maximal = true;
    for (const auto& other : candidates) {
      if (other.size() > c.size() &&
          std::includes(other.begin(), other.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) cliques.push_back(c);
  }

  // Junction forest: maximum-weight spanning forest of the clique graph
  // weighted by intersection size (positive intersections only).
  struct CliquePair {
    int overlap;
    int a;
    int b;
  };
  std::vector<CliquePair> pairs;
  const int nc = static_cast<int>(cliques.size());
  for (int a = 0; a < nc; ++a) {
    for (int b = a + 1; b < nc; ++b) {
      std::vector<int> inter;
      std::set_intersection(cliques[static_cast<std::size_t>(a)].begin(),
                            cliques[static_cast<std::size_t>(a)].end(),
                            cliques[static_cast<std::size_t>(b)].begin(),
                            cliques[static_cast<std::size_t>(b)].end(), std::back_inserter(inter));
      if (!inter.empty()) pairs.push_back(CliquePair{static_cast<int>(inter.size()), a, b});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const CliquePair& x, const CliquePair& y) {
    return std::tie(y.overlap, x.a, x.b) < std::tie(x.overlap, y.a, y.b);  // overlap desc, ids asc
  });

  std::vector<int> component(static_cast<std::size_t>(nc));
  std::iota(component.begin(), component.end(), 0);
  const auto find_root = [&component](int x) {
    while (component[static_cast<std::size_t>(x)] != x) {
      component[static_cast<std::size_t>(x)] =
          component[static_cast<std::size_t>(component[static_cast<std::size_t>(x)])];
      x = component[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<std::vector<int>> forest_adj(static_cast<std::size_t>(nc));
  for (const auto& pr : pairs) {
    const int ra = find_root(pr.a);
    const int rb = find_root(pr.b);
    if (ra == rb) continue;
    component[static_cast<std::size_t>(rb)] = ra;
    forest_adj[static_cast<std::size_t>(pr.a)].push_back(pr.b);
    forest_adj[static_cast<std::size_t>(pr.b)].push_back(pr.a);
  }

  // Orient each component away from its lowest-index clique.
  std::vector<Separator> separators;
  std::vector<bool> seen(static_cast<std::size_t>(nc), false);
  for (int root = 0; root < nc; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<int> stack{root};
    seen[static_cast<std::size_t>(root)] = true;
    while (!stack.empty()) {
      const int at = stack.back();
      stack.pop_back();
      for (int next : forest_adj[static_cast<std::size_t>(at)]) {
        if (seen[static_cast<std::size_t>(next)]) continue;
        seen[static_cast<std::size_t>(next)] = true;
        std::vector<int> members;
        std::set_intersection(cliques[static_cast<std::size_t>(at)].begin(),
                              cliques[static_cast<std::size_t>(at)].end(),
                              cliques[static_cast<std::size_t>(next)].begin(),
                              cliques[static_cast<std::size_t>(next)].end(),
                              std::back_inserter(members));
        separators.push_back(Separator{std::move(members), at, next});
        stack.push_back(next);
      }
    }
  }
  std::sort(separators.begin(), separators.end(), [](const Separator& x, const Separator& y) {
    return std::tie(x.parent, x.child) < std::tie(y.parent, y.child);
  });

  return CliqueTree(p, std::move(cliques), std::move(separators));
}

}  // namespace ifn
