#include "ifn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ifn {

WeightMatrix estimate_covariance(const DataMatrix& data, double shrinkage) {
  if (shrinkage < 0.0 || shrinkage > 1.0) {
    throw config_error("shrinkage must lie in [0, 1], got " + std::to_string(shrinkage));
  }
  const auto& x = data.values();
  const double n = static_cast<double>(data.n());
  const Eigen::RowVectorXd mean = x.colwise().mean();
  Matrix centered = x.rowwise() - mean;
  Matrix s = (centered.transpose() * centered) / (n - 1.0);
  if (shrinkage > 0.0) {
    Matrix d = s.diagonal().asDiagonal();
    s = (1.0 - shrinkage) * s + shrinkage * d;
  }
  return WeightMatrix(std::move(s), WeightKind::covariance);
}

Vector sample_mean(const DataMatrix& data) { return data.values().colwise().mean(); }

WeightMatrix covariance_to_correlation(const WeightMatrix& cov) {
  const int p = cov.p();
  const Matrix& s = cov.values();
  Vector sd(p);
  for (int i = 0; i < p; ++i) {
    if (!(s(i, i) > 0.0)) {
      throw degenerate_variable_error("variable " + std::to_string(i) +
                                      " has non-positive variance");
    }
    sd(i) = std::sqrt(s(i, i));
  }
  Matrix r(p, p);
  for (int i = 0; i < p; ++i) {
    r(i, i) = 1.0;
    for (int j = i + 1; j < p; ++j) {
      // Cauchy-Schwarz bounds |rho| by 1; clamp the last-ulp overshoot.
      const double rho = std::clamp(s(i, j) / (sd(i) * sd(j)), -1.0, 1.0);
      r(i, j) = rho;
      r(j, i) = rho;
    }
  }
  return WeightMatrix(std::move(r), WeightKind::correlation);
}

WeightMatrix squared_correlation(const WeightMatrix& corr) {
  if (corr.kind() != WeightKind::correlation) {
    throw config_error("squared_correlation expects a correlation matrix");
  }
  Matrix w = corr.values().cwiseProduct(corr.values());
  return WeightMatrix(std::move(w), WeightKind::squared_correlation);
}

}  // namespace ifn
