#pragma once

#include <optional>
#include <vector>

#include "ifn/types.hpp"

namespace ifn {

/// Mutual information between two jointly elliptical scalar variables with
/// correlation rho: -0.5 * ln(1 - rho^2).  |rho| >= 1 raises
/// divergence_error.
double pairwise_mi_elliptical(double rho);

/// Sum of squared correlations between `candidate` and the members of
/// `subclique` — the fast proxy for the mutual-information gain.
double gain_sum_squares(int candidate, const std::vector<int>& subclique, const WeightMatrix& corr);

/// Mutual information between vertex groups a and b under an elliptical
/// model with correlation matrix R:
///   I(a; b) = 0.5 * ln( det(R_a) * det(R_b) / det(R_{a ∪ b}) ).
/// Groups must be disjoint and non-empty; a singular principal submatrix
/// raises numeric_error naming the subset.
double gain_elliptical_mi(const std::vector<int>& a, const std::vector<int>& b, const WeightMatrix& corr);

/// Gain function selector for clique-expansion construction.
enum class GainKind {
  edge_weight,              // sum of candidate-to-subclique weights
  sum_squared_correlation,  // sum of squared correlations
  elliptical_mi,            // group mutual information
};

/// A gain function plus the correlation matrix it reads (required for the
/// correlation-based kinds; must carry kind() == correlation).
class GainSpec {
 public:
  static GainSpec edge_weight();
  static GainSpec sum_squared_correlation(WeightMatrix corr);
  static GainSpec elliptical_mi(WeightMatrix corr);

  GainKind kind() const { return kind_; }
  /// Gain of attaching `candidate` through sub-clique `subclique`; the
  /// edge_weight kind reads the constructor's weight matrix `w`, the others
  /// read the stored correlation matrix.
  double evaluate(int candidate, const std::vector<int>& subclique, const WeightMatrix& w) const;

 private:
  GainSpec(GainKind kind, std::optional<WeightMatrix> corr);
  GainKind kind_;
  std::optional<WeightMatrix> corr_;
};

}  // namespace ifn
