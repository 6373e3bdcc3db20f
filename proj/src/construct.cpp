#include "ifn/construct.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "ifn/planarity.hpp"

namespace ifn {
namespace {

void require_positive_off_diagonal(const WeightMatrix& w, const std::string& who) {
  const int p = w.p();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (!(w(i, j) > 0.0)) {
        throw invalid_weight_error(who + " requires positive off-diagonal weights; w(" +
                                   std::to_string(i) + "," + std::to_string(j) + ") = " +
                                   std::to_string(w(i, j)));
      }
    }
  }
}

void require_min_vertices(const WeightMatrix& w, int min_p, const std::string& who) {
  if (w.p() < min_p) {
    throw invalid_input_error(who + " requires at least " + std::to_string(min_p) +
                              " vertices, got " + std::to_string(w.p()));
  }
}

/// All candidate edges of the complete graph, sorted by descending weight,
/// ties toward the lexicographically smallest (u, v).
std::vector<Edge> sorted_candidate_edges(const WeightMatrix& w) {
  const int p = w.p();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(p - 1) / 2);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      edges.push_back(Edge{i, j, w(i, j)});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.w != b.w) return a.w > b.w;
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return edges;
}

}  // namespace

FilteredGraph mst_prim(const WeightMatrix& w) {
  require_min_vertices(w, 2, "mst_prim");
  require_positive_off_diagonal(w, "mst_prim");
  const int p = w.p();

  std::vector<bool> in_tree(static_cast<std::size_t>(p), false);
  std::vector<double> best(static_cast<std::size_t>(p), 0.0);
  std::vector<int> partner(static_cast<std::size_t>(p), 0);
  in_tree[0] = true;
  for (int j = 1; j < p; ++j) {
    best[static_cast<std::size_t>(j)] = w(0, j);
    partner[static_cast<std::size_t>(j)] = 0;
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p) - 1);
  for (int step = 1; step < p; ++step) {
    int pick = -1;
    for (int j = 0; j < p; ++j) {
      if (in_tree[static_cast<std::size_t>(j)]) continue;
      if (pick == -1 || best[static_cast<std::size_t>(j)] > best[static_cast<std::size_t>(pick)]) {
        pick = j;  // equal weights keep the smaller vertex index
      }
    }
    edges.push_back(Edge{pick, partner[static_cast<std::size_t>(pick)],
                         best[static_cast<std::size_t>(pick)]});
    in_tree[static_cast<std::size_t>(pick)] = true;
    for (int k = 0; k < p; ++k) {
      if (in_tree[static_cast<std::size_t>(k)]) continue;
      const double cand = w(pick, k);
      if (cand > best[static_cast<std::size_t>(k)] ||
          (cand == best[static_cast<std::size_t>(k)] && pick < partner[static_cast<std::size_t>(k)])) {
        best[static_cast<std::size_t>(k)] = cand;
        partner[static_cast<std::size_t>(k)] = pick;
      }
    }
  }
  return FilteredGraph(p, std::move(edges));
}

FilteredGraph mst_kruskal(const WeightMatrix& w) {
  require_min_vertices(w, 2, "mst_kruskal");
  require_positive_off_diagonal(w, "mst_kruskal");
  const int p = w.p();

  std::vector<int> root(static_cast<std::size_t>(p));
  std::iota(root.begin(), root.end(), 0);
  const auto find_root = [&root](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p) - 1);
  for (const auto& e : sorted_candidate_edges(w)) {
    const int ru = find_root(e.u);
    const int rv = find_root(e.v);
    if (ru == rv) continue;
    root[static_cast<std::size_t>(rv)] = ru;
    edges.push_back(e);
    if (edges.size() == static_cast<std::size_t>(p) - 1) break;
  }
  return FilteredGraph(p, std::move(edges));
}

FilteredGraph pmfg(const WeightMatrix& w) {
  require_min_vertices(w, 3, "pmfg");
  require_positive_off_diagonal(w, "pmfg");
  const int p = w.p();
  const std::size_t target = static_cast<std::size_t>(3 * p - 6);

  std::vector<Edge> kept;
  std::vector<std::pair<int, int>> probe;
  kept.reserve(target);
  probe.reserve(target + 1);
  for (const auto& e : sorted_candidate_edges(w)) {
    probe.emplace_back(e.u, e.v);
    if (is_planar(p, probe)) {
      kept.push_back(e);
      if (kept.size() == target) break;
    } else {
      probe.pop_back();
    }
  }
  return FilteredGraph(p, std::move(kept));
}

TmfgResult tmfg(const WeightMatrix& w) {
  require_min_vertices(w, 3, "tmfg");
  require_positive_off_diagonal(w, "tmfg");
  const int p = w.p();

  // Seed: the triangle with the largest total weight (lexicographically
  // smallest on ties).
  std::array<int, 3> seed{0, 1, 2};
  double seed_weight = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      for (int k = j + 1; k < p; ++k) {
        const double total = w(i, j) + w(i, k) + w(j, k);
        if (total > seed_weight) {
          seed = {i, j, k};
          seed_weight = total;
        }
      }
    }
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * p - 6));
  edges.push_back(Edge{seed[0], seed[1], w(seed[0], seed[1])});
  edges.push_back(Edge{seed[0], seed[2], w(seed[0], seed[2])});
  edges.push_back(Edge{seed[1], seed[2], w(seed[1], seed[2])});

  if (p == 3) {
    CliqueTree tree(p, {{seed[0], seed[1], seed[2]}}, {});
    return TmfgResult{FilteredGraph(p, std::move(edges)), std::move(tree)};
  }

  struct Face {
    std::array<int, 3> verts;  // sorted ascending
    int host;                  // clique index that owns this face; -1 for the seed
  };
  std::vector<Face> faces{Face{seed, -1}};
  std::vector<bool> covered(static_cast<std::size_t>(p), false);
  for (int v : seed) covered[static_cast<std::size_t>(v)] = true;

  std::vector<std::vector<int>> cliques;
  std::vector<Separator> separators;

  for (int inserted = 3; inserted < p; ++inserted) {
    double best_gain = -std::numeric_limits<double>::infinity();
    int best_vertex = -1;
    std::size_t best_face = 0;
    for (int v = 0; v < p; ++v) {
      if (covered[static_cast<std::size_t>(v)]) continue;
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi].verts;
        const double gain = w(v, f[0]) + w(v, f[1]) + w(v, f[2]);
        const bool better =
            gain > best_gain ||
            (gain == best_gain && (best_vertex == -1 || v < best_vertex ||
                                   (v == best_vertex && f < faces[best_face].verts)));
        if (better) {
          best_gain = gain;
          best_vertex = v;
          best_face = fi;
        }
      }
    }

    const Face used = faces[best_face];
    const int v = best_vertex;
    for (int t : used.verts) edges.push_back(Edge{v, t, w(v, t)});
    covered[static_cast<std::size_t>(v)] = true;

    std::vector<int> clique{used.verts[0], used.verts[1], used.verts[2], v};
    std::sort(clique.begin(), clique.end());
    cliques.push_back(clique);
    const int clique_index = static_cast<int>(cliques.size()) - 1;
    if (used.host >= 0) {
      separators.push_back(
          Separator{{used.verts[0], used.verts[1], used.verts[2]}, used.host, clique_index});
    }

    // The used face is consumed; the insertion exposes three new faces.
    faces[best_face] = faces.back();
    faces.pop_back();
    const auto add_face = [&faces, clique_index](int a, int b, int c) {
      std::array<int, 3> verts{a, b, c};
      std::sort(verts.begin(), verts.end());
      faces.push_back(Face{verts, clique_index});
    };
    add_face(v, used.verts[0], used.verts[1]);
    add_face(v, used.verts[0], used.verts[2]);
    add_face(v, used.verts[1], used.verts[2]);
  }

  CliqueTree tree(p, std::move(cliques), std::move(separators));
  return TmfgResult{FilteredGraph(p, std::move(edges)), std::move(tree)};
}

namespace {

/// Mutable clique-forest state shared by the mfcf expansion loop.
struct MfcfState {
  std::vector<std::vector<int>> cliques;
  std::vector<Separator> separators;
  std::map<std::vector<int>, long long> usage;  // separator member-set -> times used
  std::vector<bool> covered;
  int covered_count = 0;
  double total_gain = 0.0;

  void cover(int v) {
    covered[static_cast<std::size_t>(v)] = true;
    ++covered_count;
  }
};

/// Greedy seed per the default rule: highest-weight edge, then repeatedly the
/// highest-gain vertex, until `size` members (fewer when the pool runs out).
/// Gains of every join step accumulate (the first edge joins two singletons).
void seed_component(MfcfState& state, const WeightMatrix& w, const GainSpec& gain, int size) {
  const int p = w.p();
  std::vector<int> pool;
  for (int v = 0; v < p; ++v) {
    if (!state.covered[static_cast<std::size_t>(v)]) pool.push_back(v);
  }

  if (pool.size() == 1) {
    state.cliques.push_back({pool[0]});
    state.cover(pool[0]);
    return;
  }

  int best_a = -1;
  int best_b = -1;
  double best_w = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const double cand = w(pool[i], pool[j]);
      if (cand > best_w) {
        best_w = cand;
        best_a = pool[i];
        best_b = pool[j];
      }
    }
  }
  std::vector<int> members{best_a, best_b};
  state.total_gain += gain.evaluate(best_b, {best_a}, w);

  while (static_cast<int>(members.size()) < size &&
         members.size() < pool.size()) {
    int best_v = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (int v : pool) {
      if (std::find(members.begin(), members.end(), v) != members.end()) continue;
      const double cand = gain.evaluate(v, members, w);
      if (cand > best_gain || (cand == best_gain && (best_v == -1 || v < best_v))) {
        best_gain = cand;
        best_v = v;
      }
    }
    state.total_gain += best_gain;
    members.push_back(best_v);
  }

  std::sort(members.begin(), members.end());
  for (int v : members) state.cover(v);
  state.cliques.push_back(std::move(members));
}

/// Seed exactly as tmfg() does: maximum-total-weight triangle plus its best
/// fourth vertex; the seed triangle is marked spent so it can never host an
/// attachment, mirroring the face consumed by the first insertion.
void seed_tmfg_triangle(MfcfState& state, const WeightMatrix& w, const GainSpec& gain,
                        long long spent_count) {
  const int p = w.p();
  std::array<int, 3> tri{0, 1, 2};
  double tri_weight = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      for (int k = j + 1; k < p; ++k) {
        const double total = w(i, j) + w(i, k) + w(j, k);
        if (total > tri_weight) {
          tri = {i, j, k};
          tri_weight = total;
        }
      }
    }
  }
  int best_v = -1;
  double best_sum = -std::numeric_limits<double>::infinity();
  for (int v = 0; v < p; ++v) {
    if (v == tri[0] || v == tri[1] || v == tri[2]) continue;
    const double sum = w(v, tri[0]) + w(v, tri[1]) + w(v, tri[2]);
    if (sum > best_sum) {
      best_sum = sum;
      best_v = v;
    }
  }

  state.total_gain += gain.evaluate(tri[1], {tri[0]}, w);
  state.total_gain += gain.evaluate(tri[2], {tri[0], tri[1]}, w);
  state.total_gain += gain.evaluate(best_v, {tri[0], tri[1], tri[2]}, w);

  std::vector<int> members{tri[0], tri[1], tri[2], best_v};
  std::sort(members.begin(), members.end());
  for (int v : members) state.cover(v);
  state.cliques.push_back(std::move(members));
  state.usage[{tri[0], tri[1], tri[2]}] = spent_count;
}

}  // namespace

MfcfResult mfcf(const WeightMatrix& w, const GainSpec& gain, const MfcfConfig& cfg) {
  const int p = w.p();
  require_min_vertices(w, 2, "mfcf");
  if (cfg.min_clique < 2 || cfg.min_clique > cfg.max_clique || cfg.max_clique > p) {
    throw config_error("mfcf requires 2 <= min_clique <= max_clique <= p, got min=" +
                       std::to_string(cfg.min_clique) + " max=" + std::to_string(cfg.max_clique) +
                       " p=" + std::to_string(p));
  }
  if (cfg.max_multiplicity && *cfg.max_multiplicity < 1) {
    throw config_error("mfcf max_multiplicity must be >= 1");
  }
  if (cfg.seed_rule == MfcfSeedRule::tmfg_triangle &&
      (cfg.min_clique != 4 || cfg.max_clique != 4)) {
    throw config_error("the tmfg_triangle seed rule requires min_clique == max_clique == 4");
  }
  if (gain.kind() == GainKind::edge_weight) {
    require_positive_off_diagonal(w, "mfcf with the edge-weight gain");
  }
  const long long max_mult =
      cfg.max_multiplicity ? *cfg.max_multiplicity : std::numeric_limits<long long>::max();

  MfcfState state;
  state.covered.assign(static_cast<std::size_t>(p), false);

  if (cfg.seed_rule == MfcfSeedRule::tmfg_triangle) {
    seed_tmfg_triangle(state, w, gain, max_mult);
  } else {
    seed_component(state, w, gain, cfg.min_clique);
  }

  while (state.covered_count < p) {
    // Admissible attachment sets: sub-cliques of existing cliques with
    // min_clique - 1 <= |s| <= max_clique - 1 and usage below the cap; each
    // member-set is hosted by its lowest-index clique.
    std::map<std::vector<int>, int> hosts;
    for (std::size_t ci = 0; ci < state.cliques.size(); ++ci) {
      const auto& c = state.cliques[ci];
      const int csize = static_cast<int>(c.size());
      const int lo = cfg.min_clique - 1;
      const int hi = std::min(cfg.max_clique - 1, csize);
      for (int ssize = lo; ssize <= hi; ++ssize) {
        if (ssize < 1 || ssize > csize) continue;
        std::vector<int> pick(static_cast<std::size_t>(ssize));
        // Enumerate ssize-subsets of c in lexicographic order.
        std::vector<int> idx(static_cast<std::size_t>(ssize));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
          for (int t = 0; t < ssize; ++t) {
            pick[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
          }
          auto it = state.usage.find(pick);
          if (it == state.usage.end() || it->second < max_mult) {
            hosts.try_emplace(pick, static_cast<int>(ci));
          }
          int t = ssize - 1;
          while (t >= 0 && idx[static_cast<std::size_t>(t)] == csize - ssize + t) --t;
          if (t < 0) break;
          ++idx[static_cast<std::size_t>(t)];
          for (int q = t + 1; q < ssize; ++q) {
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
          }
        }
      }
    }

    double best_gain = -std::numeric_limits<double>::infinity();
    int best_v = -1;
    const std::vector<int>* best_set = nullptr;
    int best_host = -1;
    for (int v = 0; v < p; ++v) {
      if (state.covered[static_cast<std::size_t>(v)]) continue;
      for (const auto& [members, host] : hosts) {
        const double cand = gain.evaluate(v, members, w);
        const bool better = cand > best_gain ||
                            (cand == best_gain &&
                             (best_v == -1 || v < best_v || (v == best_v && members < *best_set)));
        if (better) {
          best_gain = cand;
          best_v = v;
          best_set = &members;
          best_host = host;
        }
      }
    }

    const bool below_threshold =
        cfg.gain_threshold && best_v != -1 && best_gain < *cfg.gain_threshold;
    if (best_v == -1 || below_threshold) {
      // Nothing (acceptable) to attach to: start a new component.
      if (cfg.seed_rule == MfcfSeedRule::tmfg_triangle) {
        throw numeric_error("tmfg-seeded mfcf cannot start additional components");
      }
      seed_component(state, w, gain, cfg.min_clique);
      continue;
    }

    state.total_gain += best_gain;
    auto& host_clique = state.cliques[static_cast<std::size_t>(best_host)];
    if (best_set->size() == host_clique.size()) {
      // Absorb: the host clique grows in place; no separator is recorded.
      host_clique.push_back(best_v);
      std::sort(host_clique.begin(), host_clique.end());
    } else {
      std::vector<int> clique = *best_set;
      clique.push_back(best_v);
      std::sort(clique.begin(), clique.end());
      ++state.usage[*best_set];
      state.separators.push_back(
          Separator{*best_set, best_host, static_cast<int>(state.cliques.size())});
      state.cliques.push_back(std::move(clique));
    }
    state.cover(best_v);
  }

  CliqueTree tree(p, std::move(state.cliques), std::move(state.separators));
  FilteredGraph graph = tree.reconstruct(w);
  return MfcfResult{std::move(graph), std::move(tree), state.total_gain};
}

}  // namespace ifn
