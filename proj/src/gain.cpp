#include "ifn/gain.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <string>

namespace ifn {
namespace {

std::string describe_members(const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

/// ln det of a principal submatrix via Cholesky; throws on non-SPD.
double logdet_submatrix(const Matrix& r, const std::vector<int>& members) {
  const auto k = static_cast<Eigen::Index>(members.size());
  if (k == 1) {
    const double d = r(members[0], members[0]);
    if (!(d > 0.0)) {
      throw numeric_error("singular correlation submatrix " + describe_members(members));
    }
    return std::log(d);
  }
  Matrix sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      sub(i, j) = r(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
    }
  }
  Eigen::LLT<Matrix> llt(sub);
  if (llt.info() != Eigen::Success) {
    throw numeric_error("singular correlation submatrix " + describe_members(members));
  }
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

}  // namespace

double pairwise_mi_elliptical(double rho) {
  if (!(std::abs(rho) < 1.0)) {
    throw divergence_error("mutual information diverges at |rho| >= 1, got rho=" +
                           std::to_string(rho));
  }
  return -0.5 * std::log1p(-rho * rho);
}

double gain_sum_squares(int candidate, const std::vector<int>& subclique, const WeightMatrix& corr) {
  double sum = 0.0;
  for (int j : subclique) {
    const double rho = corr(candidate, j);
    sum += rho * rho;
  }
  return sum;
}

double gain_elliptical_mi(const std::vector<int>& a, const std::vector<int>& b,
                          const WeightMatrix& corr) {
  if (a.empty() || b.empty()) {
    throw invalid_input_error("mutual-information groups must be non-empty");
  }
  std::vector<int> joint;
  joint.reserve(a.size() + b.size());
  joint.insert(joint.end(), a.begin(), a.end());
  joint.insert(joint.end(), b.begin(), b.end());
  std::sort(joint.begin(), joint.end());
  if (std::adjacent_find(joint.begin(), joint.end()) != joint.end()) {
    throw invalid_input_error("mutual-information groups must be disjoint");
  }
  const Matrix& r = corr.values();
  return 0.5 * (logdet_submatrix(r, a) + logdet_submatrix(r, b) - logdet_submatrix(r, joint));
}

GainSpec::GainSpec(GainKind kind, std::optional<WeightMatrix> corr)
    : kind_(kind), corr_(std::move(corr)) {
  if (kind_ != GainKind::edge_weight) {
    if (!corr_) {
      throw config_error("correlation-based gain requires a correlation matrix");
    }
    if (corr_->kind() != WeightKind::correlation) {
      throw config_error("gain reference matrix must be of correlation kind");
    }
  }
}

GainSpec GainSpec::edge_weight() { return GainSpec(GainKind::edge_weight, std::nullopt); }

GainSpec GainSpec::sum_squared_correlation(WeightMatrix corr) {
  return GainSpec(GainKind::sum_squared_correlation, std::move(corr));
}

GainSpec GainSpec::elliptical_mi(WeightMatrix corr) {
  return GainSpec(GainKind::elliptical_mi, std::move(corr));
}

double GainSpec::evaluate(int candidate, const std::vector<int>& subclique,
                          const WeightMatrix& w) const {
  switch (kind_) {
    case GainKind::edge_weight: {
      double sum = 0.0;
      for (int j : subclique) sum += w(candidate, j);
      return sum;
    }
    case GainKind::sum_squared_correlation:
      return gain_sum_squares(candidate, subclique, *corr_);
    case GainKind::elliptical_mi:
      return gain_elliptical_mi({candidate}, subclique, *corr_);
  }
  throw config_error("unknown gain kind");
}

}  // namespace ifn
