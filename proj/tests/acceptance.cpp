// Acceptance gate: twelve binary criteria, one [PASS]/[FAIL] line each.
// Tolerances are pinned here, next to each check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "ifn/analysis.hpp"
#include "ifn/chordal.hpp"
#include "ifn/construct.hpp"
#include "ifn/ensemble.hpp"
#include "ifn/hnn.hpp"
#include "ifn/io.hpp"
#include "ifn/logo.hpp"
#include "ifn/planarity.hpp"
#include "ifn/stats.hpp"
#include "oracles.hpp"

namespace {

using namespace ifn;

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::vector<std::pair<int, int>> edge_pairs(const FilteredGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
  return pairs;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

CliqueTree three_clique_chain_tree() {
  return CliqueTree(6, {{0, 1}, {1, 2, 4}, {1, 3, 4, 5}},
                    {Separator{{1}, 0, 1}, Separator{{1, 4}, 1, 2}});
}

// --------------------------------------------------------------------------
// 1. MST optimality against exhaustive spanning-tree enumeration.
// --------------------------------------------------------------------------
Outcome criterion_mst_optimality() {
  for (int i = 0; i < 200; ++i) {
    const Matrix w = oracle::random_distinct_weights(6, 1000 + i);
    const WeightMatrix wm(w, WeightKind::generic_similarity);
    const FilteredGraph prim = mst_prim(wm);
    const FilteredGraph kruskal = mst_kruskal(wm);
    const oracle::SpanningTree best = oracle::best_spanning_tree(w);
    if (!(prim == kruskal)) {
      return {false, "prim != kruskal on instance " + std::to_string(i)};
    }
    if (edge_pairs(prim) != best.edges) {
      return {false, "prim != enumeration optimum on instance " + std::to_string(i)};
    }
  }
  return {true, "200 instances, 1296 trees each"};
}

// --------------------------------------------------------------------------
// 2. TMFG/PMFG structural contracts.
// --------------------------------------------------------------------------
Outcome criterion_structural() {
  for (int i = 0; i < 100; ++i) {
    const int p = 5 + (i % 36);  // covers 5..40
    const Matrix w = oracle::random_distinct_weights(p, 2000 + i);
    const WeightMatrix wm(w, WeightKind::generic_similarity);

    const TmfgResult t = tmfg(wm);
    const std::size_t expected = static_cast<std::size_t>(3 * p - 6);
    if (t.graph.edge_count() != expected) {
      return {false, "tmfg edge count p=" + std::to_string(p)};
    }
    if (!is_planar(t.graph)) return {false, "tmfg not planar p=" + std::to_string(p)};
    if (!is_chordal(t.graph).chordal) return {false, "tmfg not chordal p=" + std::to_string(p)};
    const CliqueTree tree = extract_clique_tree(t.graph);
    for (const auto& c : tree.cliques()) {
      if (c.size() != 4) return {false, "tmfg maximal clique size != 4, p=" + std::to_string(p)};
    }
    for (const auto& s : tree.separators()) {
      if (s.members.size() != 3) return {false, "tmfg separator size != 3, p=" + std::to_string(p)};
    }
    for (const auto& [members, count] : tree.separator_multiplicity()) {
      (void)members;
      if (count != 1) return {false, "tmfg separator reused, p=" + std::to_string(p)};
    }

    const FilteredGraph pm = pmfg(wm);
    if (pm.edge_count() != expected) return {false, "pmfg edge count p=" + std::to_string(p)};
    if (!is_planar(pm)) return {false, "pmfg not planar p=" + std::to_string(p)};
  }
  return {true, "100 instances, p in 5..40"};
}

// --------------------------------------------------------------------------
// 3. MFCF special cases reduce to MST and TMFG.
// --------------------------------------------------------------------------
Outcome criterion_mfcf_special_cases() {
  for (int i = 0; i < 100; ++i) {
    const int p = 4 + (i % 9);  // 4..12
    const Matrix w = oracle::random_distinct_weights(p, 3000 + i);
    const WeightMatrix wm(w, WeightKind::generic_similarity);

    MfcfConfig as_mst;
    as_mst.min_clique = 2;
    as_mst.max_clique = 2;
    as_mst.max_multiplicity = std::nullopt;
    const MfcfResult tree_like = mfcf(wm, GainSpec::edge_weight(), as_mst);
    if (!(tree_like.graph == mst_prim(wm))) {
      return {false, "mfcf(2,2,inf) != mst on instance " + std::to_string(i)};
    }

    MfcfConfig as_tmfg;
    as_tmfg.min_clique = 4;
    as_tmfg.max_clique = 4;
    as_tmfg.max_multiplicity = 1;
    as_tmfg.seed_rule = MfcfSeedRule::tmfg_triangle;
    const MfcfResult planar_like = mfcf(wm, GainSpec::edge_weight(), as_tmfg);
    if (!(planar_like.graph == tmfg(wm).graph)) {
      return {false, "mfcf(4,4,1) != tmfg on instance " + std::to_string(i)};
    }
  }
  return {true, "100 instances, p in 4..12"};
}

// --------------------------------------------------------------------------
// 4. Greedy never beats the exhaustive planar optimum at p=6.
// --------------------------------------------------------------------------
Outcome criterion_greedy_vs_bruteforce() {
  double min_ratio = 1.0;
  double sum_ratio = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Matrix w = oracle::random_distinct_weights(6, 4000 + i);
    const WeightMatrix wm(w, WeightKind::generic_similarity);
    const double optimum = oracle::best_planar_weight_p6(w);
    const double pmfg_w = pmfg(wm).total_weight();
    const double tmfg_w = tmfg(wm).graph.total_weight();
    if (pmfg_w > optimum || tmfg_w > optimum) {
      return {false, "greedy exceeded the exhaustive optimum on instance " + std::to_string(i)};
    }
    const double ratio = std::min(pmfg_w, tmfg_w) / optimum;
    min_ratio = std::min(min_ratio, ratio);
    sum_ratio += ratio;
  }
  return {true, "20 instances; achieved/optimal ratio min " + fmt(min_ratio) + ", mean " +
                    fmt(sum_ratio / 20.0)};
}

// --------------------------------------------------------------------------
// 5. LoGo clique-marginal matching and log-determinant telescoping.
// --------------------------------------------------------------------------
Outcome criterion_logo_marginals() {
  constexpr double tol = 1e-8;
  for (int i = 0; i < 100; ++i) {
    Matrix sigma;
    CliqueTree tree = three_clique_chain_tree();
    if (i % 2 == 0) {
      sigma = oracle::random_spd(10, 5000 + i);
      const WeightMatrix cov(sigma, WeightKind::covariance);
      tree = tmfg(squared_correlation(covariance_to_correlation(cov))).tree;
    } else {
      sigma = oracle::random_spd(6, 5000 + i);
    }
    const WeightMatrix cov(sigma, WeightKind::covariance);
    const SparsePrecision jsp = logo_precision(cov, tree);
    const Matrix dense = jsp.to_dense();
    const Matrix inv = oracle::dense_inverse(dense);

    const FilteredGraph support = tree.reconstruct(cov);
    for (const auto& e : support.edges()) {
      if (std::abs(inv(e.u, e.v) - sigma(e.u, e.v)) > tol) {
        return {false, "inverse mismatch on edge, instance " + std::to_string(i)};
      }
    }
    for (int d = 0; d < support.p(); ++d) {
      if (std::abs(inv(d, d) - sigma(d, d)) > tol) {
        return {false, "inverse mismatch on diagonal, instance " + std::to_string(i)};
      }
    }
    if (std::abs(logo_logdet(cov, tree) - oracle::dense_logdet(dense)) > tol) {
      return {false, "logdet mismatch, instance " + std::to_string(i)};
    }
  }
  return {true, "100 instances (tmfg trees and the 3-clique chain), tol 1e-8"};
}

// --------------------------------------------------------------------------
// 6. Decomposed Gaussian log-likelihood equals the dense evaluation.
// --------------------------------------------------------------------------
Outcome criterion_loglik() {
  constexpr int n = 200;
  constexpr int p = 10;
  constexpr double tol_per_row = 1e-8;
  for (int i = 0; i < 20; ++i) {
    const DataMatrix data(oracle::random_gaussian_data(n, p, 6000 + i));
    const WeightMatrix cov = estimate_covariance(data);
    const CliqueTree tree = tmfg(squared_correlation(covariance_to_correlation(cov))).tree;
    const Vector mu = sample_mean(data);

    const double decomposed = gaussian_loglik_decomposed(data, mu, cov, tree);

    const Matrix j = logo_precision(cov, tree).to_dense();
    const double logdet = oracle::dense_logdet(j);
    double dense = 0.0;
    for (int row = 0; row < n; ++row) {
      const Vector centered = data.values().row(row).transpose() - mu;
      dense += -0.5 * p * std::log(2.0 * 3.14159265358979323846) + 0.5 * logdet -
               0.5 * centered.dot(j * centered);
    }
    if (std::abs(decomposed - dense) > n * tol_per_row) {
      return {false, "mismatch " + fmt(std::abs(decomposed - dense)) + " on dataset " +
                         std::to_string(i)};
    }
  }
  return {true, "20 datasets (n=200, p=10), tol 1e-8 per observation"};
}

// --------------------------------------------------------------------------
// 7. Accumulated MI gains telescope to the clique/separator determinant sum.
// --------------------------------------------------------------------------
Outcome criterion_telescoping_gain() {
  constexpr double tol = 1e-6;
  for (int i = 0; i < 50; ++i) {
    const Matrix r = oracle::random_correlation(10, 7000 + i);
    const WeightMatrix corr(r, WeightKind::correlation);
    const WeightMatrix w = squared_correlation(corr);
    const MfcfResult res = mfcf(w, GainSpec::elliptical_mi(corr), MfcfConfig{});

    const auto logdet_of = [&r](const std::vector<int>& members) {
      Matrix sub(static_cast<Eigen::Index>(members.size()),
                 static_cast<Eigen::Index>(members.size()));
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b < members.size(); ++b) sub(a, b) = r(members[a], members[b]);
      }
      return oracle::dense_logdet(sub);
    };
    double rhs = 0.0;
    for (const auto& s : res.tree.separators()) rhs += 0.5 * logdet_of(s.members);
    for (const auto& c : res.tree.cliques()) rhs -= 0.5 * logdet_of(c);
    if (std::abs(res.total_gain - rhs) > tol) {
      return {false, "gain " + fmt(res.total_gain) + " vs telescoped " + fmt(rhs) +
                         " on instance " + std::to_string(i)};
    }
  }
  return {true, "50 correlation matrices (p=10), tol 1e-6"};
}

// --------------------------------------------------------------------------
// 8. edge_pvalue equals the exact-rational oracle; monotone in f.
// --------------------------------------------------------------------------
Outcome criterion_pvalues() {
  constexpr double tol = 1e-12;
  int checked = 0;
  for (int p = 2; p <= 12; ++p) {
    const int m = p * (p - 1) / 2;
    for (int r = 1; r <= std::min(20, m); ++r) {
      double previous = 2.0;
      for (int f = 0; f <= r; ++f) {
        const double got = edge_pvalue(f, r, p);
        const double want = oracle::exact_edge_pvalue(f, r, p);
        if (std::abs(got - want) > tol) {
          return {false, "mismatch at f=" + std::to_string(f) + ", r=" + std::to_string(r) +
                             ", p=" + std::to_string(p)};
        }
        if (got > previous + 1e-15) {
          return {false, "not monotone at f=" + std::to_string(f) + ", r=" + std::to_string(r) +
                             ", p=" + std::to_string(p)};
        }
        if (!(got > 0.0) || got > 1.0) {
          return {false, "out of (0,1] at f=" + std::to_string(f)};
        }
        previous = got;
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " (f, r, p) triples, tol 1e-12"};
}

// --------------------------------------------------------------------------
// 9. Ensemble determinism across runs and thread counts.
// --------------------------------------------------------------------------
Outcome criterion_ensemble_determinism() {
  const DataMatrix data(oracle::random_gaussian_data(80, 12, 42));
  BuildRecipe recipe;
  recipe.method = Method::tmfg;
  constexpr int replicas = 40;
  constexpr std::uint64_t seed = 123;

  const EdgeEnsemble run1 = bootstrap_ensemble(data, replicas, recipe, seed);
  const EdgeEnsemble run2 = bootstrap_ensemble(data, replicas, recipe, seed);
  const EdgeEnsemble serial = bootstrap_ensemble_serial(data, replicas, recipe, seed);
  if (run1.frequencies != run2.frequencies) return {false, "two parallel runs differ"};
  if (run1.frequencies != serial.frequencies) return {false, "parallel differs from serial"};

#if defined(_OPENMP)
  const int prev = omp_get_max_threads();
  omp_set_num_threads(1);
  const EdgeEnsemble single = bootstrap_ensemble(data, replicas, recipe, seed);
  omp_set_num_threads(prev);
  if (run1.frequencies != single.frequencies) return {false, "1-thread differs from many-thread"};
#endif

  const std::string v1 = serialize_edge_list(validated_network(run1, 0.05), data.names());
  const std::string v2 = serialize_edge_list(validated_network(run2, 0.05), data.names());
  if (v1 != v2) return {false, "validated networks differ byte-wise"};
  return {true, "40 replicas, two runs + serial + 1-thread all byte-identical"};
}

// --------------------------------------------------------------------------
// 10. Regression matches normal equations; off-support coefficients are 0.
// --------------------------------------------------------------------------
Outcome criterion_regression() {
  constexpr double tol = 1e-8;
  constexpr int p = 8;
  for (int i = 0; i < 50; ++i) {
    const Matrix sigma = oracle::random_spd(p, 8000 + i);
    const WeightMatrix cov(sigma, WeightKind::covariance);
    Vector mu(p);
    for (int j = 0; j < p; ++j) mu(j) = 0.1 * j - 0.3;

    std::vector<int> everyone(p);
    for (int j = 0; j < p; ++j) everyone[static_cast<std::size_t>(j)] = j;
    const CliqueTree full(p, {everyone}, {});
    const RegressionModel model = ifn_regression(0, mu, logo_precision(cov, full));

    // Normal equations on the same covariance: beta = Sigma_xx^{-1} sigma_xy.
    const Matrix sxx = sigma.block(1, 1, p - 1, p - 1);
    const Vector sxy = sigma.block(1, 0, p - 1, 1);
    const Vector beta = sxx.llt().solve(sxy);
    for (int j = 0; j < p - 1; ++j) {
      if (std::abs(model.coefficients[static_cast<std::size_t>(j)] - beta(j)) > tol) {
        return {false, "coefficient mismatch on instance " + std::to_string(i)};
      }
    }
    const double intercept = mu(0) - beta.dot(mu.tail(p - 1));
    if (std::abs(model.intercept - intercept) > tol) {
      return {false, "intercept mismatch on instance " + std::to_string(i)};
    }
  }

  // Path-shaped support: the target sees only variable 1; everything else
  // must come out exactly zero.
  const Matrix sigma = oracle::random_spd(p, 8999);
  const WeightMatrix cov(sigma, WeightKind::covariance);
  std::vector<std::vector<int>> cliques;
  std::vector<Separator> seps;
  for (int v = 0; v + 1 < p; ++v) {
    cliques.push_back({v, v + 1});
    if (v > 0) seps.push_back(Separator{{v}, v - 1, v});
  }
  const CliqueTree path(p, std::move(cliques), std::move(seps));
  const RegressionModel sparse = ifn_regression(0, Vector::Zero(p), logo_precision(cov, path));
  for (int j = 1; j < p - 1; ++j) {  // coefficients are for variables 1..p-1; index 0 is variable 1
    if (sparse.coefficients[static_cast<std::size_t>(j)] != 0.0) {
      return {false, "off-support coefficient not exactly zero"};
    }
  }
  return {true, "50 dense systems (tol 1e-8) + exact sparsity on a path support"};
}

// --------------------------------------------------------------------------
// 11. Architecture-export golden cases.
// --------------------------------------------------------------------------
Outcome criterion_hnn_golden() {
  // Triangle {0,1,2} with pendant edge {2,3}, layered.
  const FilteredGraph triangle_with_tail(4, {Edge{0, 1, 1.0}, Edge{0, 2, 1.0}, Edge{1, 2, 1.0}, Edge{2, 3, 1.0}});
  const HnnSpec layered = export_hnn(triangle_with_tail, HnnMode::layered, 2);
  const std::vector<std::vector<int>> expected_members = {
      {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {0, 1, 2}, {}};
  const std::vector<int> expected_layers = {0, 0, 0, 0, 1, 1, 1, 1, 2, 3};
  if (layered.nodes.size() != 10 || layered.final_node != 9) {
    return {false, "layered node census wrong"};
  }
  for (std::size_t i = 0; i < 10; ++i) {
    if (layered.nodes[i].members != expected_members[i] ||
        layered.nodes[i].layer != expected_layers[i]) {
      return {false, "layered node " + std::to_string(i) + " wrong"};
    }
  }
  const std::vector<std::pair<int, int>> expected_edges = {
      {0, 4}, {0, 5}, {1, 4}, {1, 6}, {2, 5}, {2, 6}, {2, 7},
      {3, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 9}, {8, 9}};
  if (layered.edges != expected_edges) return {false, "layered wiring wrong"};

  // Single triangle, flat.
  const FilteredGraph triangle(3, {Edge{0, 1, 1.0}, Edge{0, 2, 1.0}, Edge{1, 2, 1.0}});
  const HnnSpec flat = export_hnn(triangle, HnnMode::flat, 2);
  const std::vector<std::vector<int>> flat_members = {{0},    {1},    {2},    {0, 1},
                                                      {0, 1, 2}, {0, 2}, {1, 2}, {}};
  if (flat.nodes.size() != 8 || flat.final_node != 7) return {false, "flat node census wrong"};
  for (std::size_t i = 0; i < 8; ++i) {
    if (flat.nodes[i].members != flat_members[i]) {
      return {false, "flat node " + std::to_string(i) + " wrong"};
    }
  }
  const std::vector<std::pair<int, int>> flat_edges = {
      {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 6},
      {2, 4}, {2, 5}, {2, 6}, {3, 7}, {4, 7}, {5, 7}, {6, 7}};
  if (flat.edges != flat_edges) return {false, "flat wiring wrong"};

  // Serialized documents round-trip to equal specs.
  const std::vector<std::string> names4 = {"a", "b", "c", "d"};
  const NamedHnn back4 = parse_hnn(serialize_hnn(layered, names4));
  if (!(back4.spec == layered) || back4.names != names4) return {false, "layered round trip"};
  const std::vector<std::string> names3 = {"x", "y", "z"};
  const NamedHnn back3 = parse_hnn(serialize_hnn(flat, names3));
  if (!(back3.spec == flat) || back3.names != names3) return {false, "flat round trip"};

  return {true, "layered and flat exports match the expected structure exactly"};
}

// --------------------------------------------------------------------------
// 12. CLI round trips and byte-identical reruns.
// --------------------------------------------------------------------------
int run_command(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome criterion_cli() {
  namespace fs = std::filesystem;
  const std::string cli = IFN_CLI_PATH;
  const fs::path dir = fs::temp_directory_path() / ("ifn_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const auto path = [&dir](const std::string& name) { return (dir / name).string(); };
  Outcome failure{false, ""};
  const auto fail = [&](const std::string& why) {
    failure.detail = why;
    return failure;
  };

  // A reproducible dataset with named columns.
  const Matrix x = oracle::random_gaussian_data(40, 6, 99);
  {
    std::ostringstream csv;
    csv << "a,b,c,d,e,f\n";
    for (int i = 0; i < x.rows(); ++i) {
      for (int j = 0; j < x.cols(); ++j) csv << (j ? "," : "") << format_real(x(i, j));
      csv << "\n";
    }
    write_file(path("data.csv"), csv.str());
  }

  // build: edge list + clique tree, and a byte-identical rerun.
  const std::string build_cmd = cli + " build --method tmfg --input " + path("data.csv") +
                                " --header --out " + path("net.edges") + " --tree " +
                                path("tree.json");
  if (run_command(build_cmd) != 0) return fail("build exited nonzero");
  const std::string edges_text = read_file(path("net.edges"));
  const NamedGraph net = parse_edge_list(edges_text);
  if (net.graph.edge_count() != 12) return fail("build edge count != 3p-6");
  const NamedCliqueTree tree = parse_clique_tree(read_file(path("tree.json")));
  if (tree.tree.p() != 6) return fail("tree dimension wrong");
  if (run_command(cli + " build --method tmfg --input " + path("data.csv") + " --header --out " +
                  path("net2.edges") + " --tree " + path("tree2.json")) != 0) {
    return fail("build rerun exited nonzero");
  }
  if (read_file(path("net2.edges")) != edges_text ||
      read_file(path("tree2.json")) != read_file(path("tree.json"))) {
    return fail("build rerun not byte-identical");
  }
  if (serialize_edge_list(net.graph, net.names) != edges_text) {
    return fail("edge list does not round-trip");
  }

  // logo: reassembled inverse matches the sample covariance on the support.
  if (run_command(cli + " logo --tree " + path("tree.json") + " --input " + path("data.csv") +
                  " --header --out " + path("precision.coo")) != 0) {
    return fail("logo exited nonzero");
  }
  const NamedPrecision prec = parse_precision(read_file(path("precision.coo")));
  {
    const DataMatrix data(x, {"a", "b", "c", "d", "e", "f"});
    const Matrix sigma = estimate_covariance(data).values();
    const Matrix inv = oracle::dense_inverse(prec.precision.to_dense());
    constexpr double tol = 1e-8;
    for (const auto& [key, value] : prec.precision.entries()) {
      (void)value;
      if (std::abs(inv(key.first, key.second) - sigma(key.first, key.second)) > tol) {
        return fail("logo inverse does not match covariance on support");
      }
    }
    if (serialize_precision(prec.precision, prec.names) != read_file(path("precision.coo"))) {
      return fail("precision file does not round-trip");
    }
  }

  // ensemble: seeded rerun is byte-identical; 'mst' alias accepted.
  const std::string ens_cmd = cli + " ensemble --method mst --replicas 12 --seed 7 --alpha 0.05" +
                              " --input " + path("data.csv") + " --header --out ";
  if (run_command(ens_cmd + path("validated.edges")) != 0) return fail("ensemble exited nonzero");
  if (run_command(ens_cmd + path("validated2.edges")) != 0) return fail("ensemble rerun failed");
  const std::string validated = read_file(path("validated.edges"));
  if (validated != read_file(path("validated2.edges"))) {
    return fail("ensemble outputs not byte-identical");
  }
  if (!validated.empty()) {
    const NamedGraph vg = parse_edge_list(validated);
    if (serialize_edge_list(vg.graph, vg.names) != validated) {
      return fail("validated edge list does not round-trip");
    }
  }

  // hnn: document round-trips through the parser.
  if (run_command(cli + " hnn --method tmfg --input " + path("data.csv") + " --header" +
                  " --mode layered --dmax 3 --out " + path("arch.json")) != 0) {
    return fail("hnn exited nonzero");
  }
  const std::string arch = read_file(path("arch.json"));
  const NamedHnn parsed = parse_hnn(arch);
  if (serialize_hnn(parsed.spec, parsed.names) != arch) return fail("hnn does not round-trip");

  // Exit codes: usage error (1) and data error (2).
  if (run_command(cli + " build --method tmfg --gain mi --input " + path("data.csv") +
                  " --header --out " + path("x.edges") + " 2>/dev/null") != 1) {
    return fail("usage error did not exit 1");
  }
  if (run_command(cli + " build --method tmfg --input " + path("missing.csv") + " --out " +
                  path("x.edges") + " 2>/dev/null") != 2) {
    return fail("missing input did not exit 2");
  }

  std::error_code ec;
  fs::remove_all(dir, ec);
  return {true, "build/logo/ensemble/hnn artifacts re-parse equal; reruns byte-identical"};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {"MST optimality vs exhaustive enumeration", criterion_mst_optimality},
      {"TMFG/PMFG structural contracts", criterion_structural},
      {"MFCF special cases (MST, TMFG)", criterion_mfcf_special_cases},
      {"greedy vs brute-force planar optimum", criterion_greedy_vs_bruteforce},
      {"LoGo clique-marginal matching", criterion_logo_marginals},
      {"likelihood decomposition", criterion_loglik},
      {"telescoping MI gain", criterion_telescoping_gain},
      {"validation p-values vs exact rationals", criterion_pvalues},
      {"ensemble determinism", criterion_ensemble_determinism},
      {"regression reduction", criterion_regression},
      {"architecture-export golden cases", criterion_hnn_golden},
      {"CLI round-trip and determinism", criterion_cli},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.ok) ++failures;
    std::printf("[%s] %2zu. %s%s%s\n", outcome.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                outcome.detail.empty() ? "" : " — ", outcome.detail.c_str());
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
