#include "ifn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ifn/errors.hpp"

namespace ifn {
namespace {

std::vector<int> ranked_order(const std::vector<double>& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&scores](int a, int b) {
    const double sa = scores[static_cast<std::size_t>(a)];
    const double sb = scores[static_cast<std::size_t>(b)];
    if (sa != sb) return sa > sb;
    return a < b;
  });
  return order;
}

/// Principal eigenvector of the weighted adjacency by power iteration.  The
/// iteration runs on A + cI with c = max absolute row sum: the shift keeps
/// every eigenvalue non-negative, so the dominant direction cannot oscillate
/// (bipartite graphs pair +lambda with -lambda on A itself).
std::vector<double> eigenvector_scores(const FilteredGraph& g) {
  if (g.edge_count() == 0) {
    throw undefined_centrality_error("eigenvector centrality is undefined on a graph with no edges");
  }
  const int p = g.p();
  Matrix a = Matrix::Zero(p, p);
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.w;
    a(e.v, e.u) = e.w;
  }
  const double shift = a.cwiseAbs().rowwise().sum().maxCoeff();

  Vector x = Vector::Constant(p, 1.0 / p);
  constexpr double tolerance = 1e-10;
  constexpr int max_iterations = 1000000;
  for (int it = 0; it < max_iterations; ++it) {
    Vector next = a * x + shift * x;
    const double norm = next.lpNorm<1>();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw numeric_error("power iteration degenerated while computing eigenvector centrality");
    }
    next /= norm;
    const double change = (next - x).lpNorm<1>();
    x = std::move(next);
    if (change <= tolerance) {
      return std::vector<double>(x.data(), x.data() + p);
    }
  }
  throw numeric_error("power iteration failed to converge to relative tolerance 1e-10");
}

PortfolioWeights assemble(Vector w, double lambda, double gamma) {
  PortfolioWeights out;
  out.w = std::move(w);
  out.lambda = lambda;
  out.gamma = gamma;
  return out;
}

}  // namespace

FeatureRanking feature_ranking(const FilteredGraph& g, CentralityMethod method) {
  FeatureRanking ranking;
  ranking.method = method;
  if (method == CentralityMethod::degree) {
    const std::vector<int> degrees = g.degrees();
    ranking.scores.assign(degrees.begin(), degrees.end());
  } else {
    ranking.scores = eigenvector_scores(g);
  }
  ranking.order = ranked_order(ranking.scores);
  return ranking;
}

PortfolioWeights markowitz_weights(const SparsePrecision& precision, const Vector& mu, double lambda,
                                   double gamma) {
  if (mu.size() != precision.p()) {
    throw invalid_input_error("mean vector has " + std::to_string(mu.size()) +
                              " entries but the precision is " + std::to_string(precision.p()) +
                              "-dimensional");
  }
  const Vector target = lambda * mu + Vector::Constant(precision.p(), gamma);
  return assemble(precision.apply(target), lambda, gamma);
}

PortfolioWeights markowitz_weights(const Matrix& precision, const Vector& mu, double lambda,
                                   double gamma) {
  if (precision.rows() != precision.cols()) {
    throw invalid_input_error("precision matrix must be square");
  }
  if (mu.size() != precision.rows()) {
    throw invalid_input_error("mean vector has " + std::to_string(mu.size()) +
                              " entries but the precision is " + std::to_string(precision.rows()) +
                              "-dimensional");
  }
  const Vector target = lambda * mu + Vector::Constant(precision.rows(), gamma);
  return assemble(precision * target, lambda, gamma);
}

}  // namespace ifn
