#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ifn/types.hpp"

namespace ifn {

/// Symmetric sparse precision (inverse-covariance) matrix whose nonzero
/// pattern is the support of a filtered graph plus the diagonal.  Entries are
/// stored once per unordered pair (i <= j) in a deterministic ordered map.
class SparsePrecision {
 public:
  SparsePrecision(int p, std::map<std::pair<int, int>, double> entries);

  int p() const { return p_; }
  /// Value at (i, j); zero off the stored support.
  double at(int i, int j) const;
  const std::map<std::pair<int, int>, double>& entries() const { return entries_; }
  std::size_t stored_count() const { return entries_.size(); }
  Matrix to_dense() const;
  Vector apply(const Vector& x) const;  // y = J x

  friend bool operator==(const SparsePrecision& a, const SparsePrecision& b) {
    return a.p_ == b.p_ && a.entries_ == b.entries_;
  }

 private:
  int p_ = 0;
  std::map<std::pair<int, int>, double> entries_;  // keys (i, j) with i <= j
};

/// Sparse inverse covariance over a clique forest: per-clique inverses summed
/// in, per-separator inverses subtracted out,
///   J_ij = sum_{cliques c containing i,j} (S_c^-1)_ij
///        - sum_{separators s containing i,j} (S_s^-1)_ij,
/// zero off the forest support.  `shrinkage` is applied to each submatrix
/// toward its own diagonal before inversion.  A submatrix that fails its
/// Cholesky factorization raises numeric_error naming the clique.
/// Parallelizes the per-submatrix inversions; the accumulation order is
/// fixed, so results are bit-identical across thread counts and to the
/// serial variant below.
SparsePrecision logo_precision(const WeightMatrix& cov, const CliqueTree& tree, double shrinkage = 0.0);

/// Plain sequential reference implementation of logo_precision.
SparsePrecision logo_precision_serial(const WeightMatrix& cov, const CliqueTree& tree,
                                      double shrinkage = 0.0);

/// log det of the precision assembled by logo_precision, computed by
/// telescoping over the forest:
///   ln det J = sum_s ln det S_s - sum_c ln det S_c.
double logo_logdet(const WeightMatrix& cov, const CliqueTree& tree, double shrinkage = 0.0);

/// Total Gaussian log-likelihood of the rows of `data` under the
/// clique-decomposed model with mean `mu` and covariance `cov`:
///   sum_rows [ sum_c ln N(x_c; mu_c, S_c) - sum_s ln N(x_s; mu_s, S_s) ].
double gaussian_loglik_decomposed(const DataMatrix& data, const Vector& mu, const WeightMatrix& cov,
                                  const CliqueTree& tree);

/// Radial generator of an elliptical family.
enum class EllipticalGenerator {
  gaussian,
  student_t,
};

/// Elliptical density  f(x) = k_p * |J|^(1/2) * g(d^2),
/// d^2 = (x - mu)^T J (x - mu), where J is the inverse scale matrix:
///   gaussian:  g(u) = exp(-u / 2),            k_p = (2*pi)^(-p/2)
///   student_t: g(u) = (1 + u/nu)^-((nu+p)/2), k_p = Gamma((nu+p)/2) /
///                     (Gamma(nu/2) * (nu*pi)^(p/2))
/// Factories take the precision of the *covariance*; for student_t (nu > 2)
/// the scale is covariance * (nu - 2) / nu, so the stored inverse scale is
/// the input precision times nu / (nu - 2).
class EllipticalModel {
 public:
  static EllipticalModel gaussian(Vector mu, const SparsePrecision& precision);
  static EllipticalModel gaussian(Vector mu, Matrix precision);
  static EllipticalModel student_t(Vector mu, const SparsePrecision& precision, double nu);
  static EllipticalModel student_t(Vector mu, Matrix precision, double nu);

  int p() const { return static_cast<int>(mu_.size()); }
  const Vector& mu() const { return mu_; }
  const Matrix& inverse_scale() const { return inverse_scale_; }
  EllipticalGenerator generator() const { return generator_; }
  double nu() const { return nu_; }
  double log_density(const Vector& x) const;

 private:
  EllipticalModel(Vector mu, Matrix inverse_scale, EllipticalGenerator gen, double nu);
  Vector mu_;
  Matrix inverse_scale_;
  EllipticalGenerator generator_ = EllipticalGenerator::gaussian;
  double nu_ = 0.0;
  double half_logdet_ = 0.0;   // 0.5 * ln det(inverse scale)
  double log_kp_ = 0.0;        // ln of the normalization constant
};

/// Density value exp(model.log_density(x)).
double elliptical_density(const Vector& x, const EllipticalModel& model);

/// Linear predictor of variable `target` from all others, read directly off
/// a precision matrix:  beta_j = -J_{y,j} / J_{y,y}  (zero off support),
/// intercept mu_y - beta^T mu_x, residual variance 1 / J_{y,y}.
struct RegressionModel {
  int target = 0;
  /// One coefficient per non-target variable, ascending variable index.
  std::vector<double> coefficients;
  double intercept = 0.0;
  double residual_variance = 0.0;

  /// Prediction from a full p-vector (the target entry is ignored).
  double predict(const Vector& x) const;
};

RegressionModel ifn_regression(int target, const Vector& mu, const SparsePrecision& precision);

}  // namespace ifn
