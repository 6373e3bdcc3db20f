#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ifn/chordal.hpp"
#include "ifn/construct.hpp"
#include "ifn/errors.hpp"
#include "ifn/stats.hpp"
#include "oracles.hpp"

using namespace ifn;

namespace {

MfcfConfig config(int min_clique, int max_clique, std::optional<long long> mult) {
  MfcfConfig cfg;
  cfg.min_clique = min_clique;
  cfg.max_clique = max_clique;
  cfg.max_multiplicity = mult;
  return cfg;
}

std::vector<std::pair<int, int>> edge_pairs(const FilteredGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
  return pairs;
}

}  // namespace

TEST_CASE("clique size two with unbounded reuse reproduces the spanning tree") {
  for (int rep = 0; rep < 12; ++rep) {
    const int p = 5 + rep;
    const Matrix w = oracle::random_distinct_weights(p, 900 + static_cast<std::uint64_t>(rep));
    const WeightMatrix wm(w, WeightKind::generic_similarity);
    const MfcfResult r = mfcf(wm, GainSpec::edge_weight(), config(2, 2, std::nullopt));
    const FilteredGraph tree = mst_prim(wm);
    CHECK(r.graph == tree);
    // Every join gain is the weight of the edge it adds, so the total gain is
    // the tree weight (sums are exact for these generated weights).
    CHECK(r.total_gain == tree.total_weight());
    CHECK(r.tree.components() == 1);
  }
}

TEST_CASE("clique size four with single-use separators reproduces the triangulated greedy") {
  for (int rep = 0; rep < 12; ++rep) {
    const int p = 4 + rep;
    const Matrix w = oracle::random_distinct_weights(p, 950 + static_cast<std::uint64_t>(rep));
    const WeightMatrix wm(w, WeightKind::generic_similarity);
    MfcfConfig cfg = config(4, 4, 1);
    cfg.seed_rule = MfcfSeedRule::tmfg_triangle;
    const MfcfResult r = mfcf(wm, GainSpec::edge_weight(), cfg);
    CHECK(r.graph == tmfg(wm).graph);
  }
}

TEST_CASE("min_clique equal to p yields a single all-vertex clique") {
  const Matrix w = oracle::random_distinct_weights(5, 400);
  const WeightMatrix wm(w, WeightKind::generic_similarity);
  const MfcfResult r = mfcf(wm, GainSpec::edge_weight(), config(5, 5, 1));
  REQUIRE(r.tree.cliques().size() == 1);
  CHECK(r.tree.cliques()[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(r.tree.separators().empty());
  CHECK(r.graph.edge_count() == 10);
}

TEST_CASE("single-clique information gain telescopes to the joint determinant") {
  const Matrix rm = oracle::random_correlation(5, 41);
  const WeightMatrix corr(rm, WeightKind::correlation);
  const WeightMatrix w = squared_correlation(corr);
  const MfcfResult r = mfcf(w, GainSpec::elliptical_mi(corr), config(5, 5, 1));
  REQUIRE(r.tree.cliques().size() == 1);
  CHECK(r.total_gain == doctest::Approx(-0.5 * oracle::dense_logdet(rm)).epsilon(1e-10));
}

TEST_CASE("a prohibitive gain threshold splits the build into fresh seeds") {
  MfcfConfig cfg = config(2, 2, std::nullopt);
  cfg.gain_threshold = 1e18;

  const Matrix w6 = oracle::random_distinct_weights(6, 402);
  const MfcfResult r6 = mfcf(WeightMatrix(w6, WeightKind::generic_similarity),
                             GainSpec::edge_weight(), cfg);
  CHECK(r6.graph.edge_count() == 3);
  CHECK(r6.tree.components() == 3);
  for (int d : r6.graph.degrees()) CHECK(d == 1);  // a perfect matching

  const Matrix w7 = oracle::random_distinct_weights(7, 403);
  const MfcfResult r7 = mfcf(WeightMatrix(w7, WeightKind::generic_similarity),
                             GainSpec::edge_weight(), cfg);
  CHECK(r7.graph.edge_count() == 3);
  CHECK(r7.tree.components() == 4);  // three pairs plus a leftover singleton clique
  const auto sizes = [&] {
    std::vector<std::size_t> s;
    for (const auto& c : r7.tree.cliques()) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  }();
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 2});
}

TEST_CASE("single-use singleton separators force a path") {
  const Matrix w = oracle::random_distinct_weights(8, 404);
  const WeightMatrix wm(w, WeightKind::generic_similarity);
  const MfcfResult r = mfcf(wm, GainSpec::edge_weight(), config(2, 2, 1));
  CHECK(r.graph.edge_count() == 7);
  CHECK(r.tree.components() == 1);
  for (int d : r.graph.degrees()) CHECK(d <= 2);
}

TEST_CASE("clique and separator sizes respect the configured bounds") {
  const Matrix w = oracle::random_distinct_weights(12, 405);
  const WeightMatrix wm(w, WeightKind::generic_similarity);
  const MfcfResult r = mfcf(wm, GainSpec::edge_weight(), config(3, 5, 2));
  for (const auto& c : r.tree.cliques()) {
    CHECK(c.size() >= 3);
    CHECK(c.size() <= 5);
  }
  for (const auto& s : r.tree.separators()) {
    CHECK(s.members.size() >= 2);
    CHECK(s.members.size() <= 4);
  }
  for (const auto& [members, count] : r.tree.separator_multiplicity()) {
    (void)members;
    CHECK(count <= 2);
  }
  CHECK(is_chordal(r.graph).chordal);
  CHECK(oracle::chordal_by_elimination(r.graph));
}

TEST_CASE("greedy never beats the exhaustive optimum over triangle-clique graphs") {
  // All chordal 6-vertex graphs whose maximal cliques have at most 3
  // vertices form the comparison class for min=max=3.
  const int pairs[15][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
                            {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  for (int rep = 0; rep < 4; ++rep) {
    const Matrix w = oracle::random_distinct_weights(6, 500 + static_cast<std::uint64_t>(rep));
    const WeightMatrix wm(w, WeightKind::generic_similarity);
    const MfcfResult r = mfcf(wm, GainSpec::edge_weight(), config(3, 3, std::nullopt));

    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
      std::vector<std::uint32_t> adj(6, 0);
      double total = 0.0;
      for (int b = 0; b < 15; ++b) {
        if (mask & (1u << b)) {
          adj[static_cast<std::size_t>(pairs[b][0])] |= 1u << pairs[b][1];
          adj[static_cast<std::size_t>(pairs[b][1])] |= 1u << pairs[b][0];
          total += w(pairs[b][0], pairs[b][1]);
        }
      }
      if (total <= best) continue;
      bool has_k4 = false;
      for (int a = 0; a < 6 && !has_k4; ++a) {
        for (int b = a + 1; b < 6 && !has_k4; ++b) {
          for (int c = b + 1; c < 6 && !has_k4; ++c) {
            for (int d = c + 1; d < 6 && !has_k4; ++d) {
              const std::uint32_t quad = (1u << a) | (1u << b) | (1u << c) | (1u << d);
              has_k4 = ((adj[static_cast<std::size_t>(a)] & quad) == (quad ^ (1u << a))) &&
                       ((adj[static_cast<std::size_t>(b)] & quad) == (quad ^ (1u << b))) &&
                       ((adj[static_cast<std::size_t>(c)] & quad) == (quad ^ (1u << c))) &&
                       ((adj[static_cast<std::size_t>(d)] & quad) == (quad ^ (1u << d)));
            }
          }
        }
      }
      if (!has_k4 && oracle::chordal_by_elimination(6, adj)) best = total;
    }
    CHECK(r.graph.total_weight() <= best);
  }
}

TEST_CASE("expansion is deterministic") {
  const Matrix w = oracle::random_distinct_weights(10, 406);
  const WeightMatrix wm(w, WeightKind::generic_similarity);
  const MfcfResult a = mfcf(wm, GainSpec::edge_weight(), config(3, 4, 2));
  const MfcfResult b = mfcf(wm, GainSpec::edge_weight(), config(3, 4, 2));
  CHECK(a.graph == b.graph);
  CHECK(a.tree == b.tree);
  CHECK(a.total_gain == b.total_gain);
}

TEST_CASE("squared-correlation gain runs on correlation-derived weights") {
  const Matrix rm = oracle::random_correlation(9, 42);
  const WeightMatrix corr(rm, WeightKind::correlation);
  const WeightMatrix w = squared_correlation(corr);
  const MfcfResult r = mfcf(w, GainSpec::sum_squared_correlation(corr), config(4, 4, 1));
  CHECK(r.graph.edge_count() == static_cast<std::size_t>(3 * 9 - 6));
  CHECK(is_chordal(r.graph).chordal);
  CHECK(r.total_gain > 0.0);
}

TEST_CASE("configuration errors are rejected up front") {
  const Matrix w = oracle::random_distinct_weights(5, 407);
  const WeightMatrix wm(w, WeightKind::generic_similarity);
  const GainSpec gain = GainSpec::edge_weight();
  CHECK_THROWS_AS(mfcf(wm, gain, config(1, 2, 1)), config_error);
  CHECK_THROWS_AS(mfcf(wm, gain, config(4, 3, 1)), config_error);
  CHECK_THROWS_AS(mfcf(wm, gain, config(2, 6, 1)), config_error);
  CHECK_THROWS_AS(mfcf(wm, gain, config(2, 2, 0)), config_error);

  MfcfConfig bad_seed = config(3, 3, 1);
  bad_seed.seed_rule = MfcfSeedRule::tmfg_triangle;
  CHECK_THROWS_AS(mfcf(wm, gain, bad_seed), config_error);

  Matrix z = Matrix::Constant(4, 4, 1.0);
  z.diagonal().setZero();
  z(0, 1) = z(1, 0) = 0.0;
  CHECK_THROWS_AS(mfcf(WeightMatrix(z, WeightKind::generic_similarity), gain, config(2, 2, 1)),
                  invalid_weight_error);
}

TEST_CASE("edge pairs of the nested special cases agree across gain functions") {
  // With squared correlations as both the weight matrix and the gain source,
  // the sum-squared gain equals the edge-weight gain, so the builds coincide.
  const Matrix rm = oracle::random_correlation(8, 43);
  const WeightMatrix corr(rm, WeightKind::correlation);
  const WeightMatrix w = squared_correlation(corr);
  const MfcfResult via_weights = mfcf(w, GainSpec::edge_weight(), config(4, 4, 1));
  const MfcfResult via_corr = mfcf(w, GainSpec::sum_squared_correlation(corr), config(4, 4, 1));
  CHECK(edge_pairs(via_weights.graph) == edge_pairs(via_corr.graph));
}
