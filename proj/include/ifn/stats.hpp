#pragma once

#include "ifn/types.hpp"

namespace ifn {

/// Unbiased sample covariance (divisor n - 1) with optional diagonal
/// shrinkage: S' = (1 - shrinkage) * S + shrinkage * diag(S),
/// shrinkage in [0, 1].
WeightMatrix estimate_covariance(const DataMatrix& data, double shrinkage = 0.0);

/// Column means of the data.
Vector sample_mean(const DataMatrix& data);

/// Rescales a covariance matrix to a correlation matrix
/// (R_ij = S_ij / sqrt(S_ii * S_jj), clamped to [-1, 1] against roundoff).
/// A non-positive diagonal entry raises degenerate_variable_error naming the
/// offending variable index.
WeightMatrix covariance_to_correlation(const WeightMatrix& cov);

/// Entrywise square of a correlation matrix, tagged squared_correlation.
WeightMatrix squared_correlation(const WeightMatrix& corr);

}  // namespace ifn
