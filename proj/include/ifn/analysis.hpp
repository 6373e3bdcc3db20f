#pragma once

#include <vector>

#include "ifn/logo.hpp"
#include "ifn/types.hpp"

namespace ifn {

enum class CentralityMethod {
  degree,       // score = number of incident edges
  eigenvector,  // principal eigenvector of the weighted adjacency, unit 1-norm
};

struct FeatureRanking {
  CentralityMethod method = CentralityMethod::degree;
  /// Vertex indices sorted by non-increasing score, ties by ascending index.
  std::vector<int> order;
  /// Score per vertex (indexed by vertex, not by rank).
  std::vector<double> scores;
};

/// Centrality-based variable ranking on a filtered network.  Eigenvector
/// centrality of an edgeless graph raises undefined_centrality_error.
FeatureRanking feature_ranking(const FilteredGraph& g, CentralityMethod method);

struct PortfolioWeights {
  Vector w;
  double lambda = 0.0;
  double gamma = 0.0;
};

/// Mean-variance portfolio weights w = J (lambda * mu + gamma * 1), without
/// normalization.  The precision can be sparse or dense; dimensions must
/// agree.
PortfolioWeights markowitz_weights(const SparsePrecision& precision, const Vector& mu, double lambda,
                                   double gamma);
PortfolioWeights markowitz_weights(const Matrix& precision, const Vector& mu, double lambda,
                                   double gamma);

}  // namespace ifn
