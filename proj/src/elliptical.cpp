#include <Eigen/Cholesky>
#include <cmath>
#include <string>

#include "ifn/logo.hpp"

namespace ifn {
namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double ln_2pi = 1.8378770664093454836;

}  // namespace

EllipticalModel::EllipticalModel(Vector mu, Matrix inverse_scale, EllipticalGenerator gen, double nu)
    : mu_(std::move(mu)), inverse_scale_(std::move(inverse_scale)), generator_(gen), nu_(nu) {
  const auto p = mu_.size();
  if (inverse_scale_.rows() != p || inverse_scale_.cols() != p) {
    throw invalid_input_error("inverse scale matrix size does not match the mean vector (" +
                              std::to_string(inverse_scale_.rows()) + " vs " + std::to_string(p) +
                              ")");
  }
  Eigen::LLT<Matrix> llt(inverse_scale_);
  if (llt.info() != Eigen::Success) {
    throw numeric_error("inverse scale matrix is not positive definite");
  }
  half_logdet_ = llt.matrixLLT().diagonal().array().log().sum();

  const double pd = static_cast<double>(p);
  if (generator_ == EllipticalGenerator::gaussian) {
    log_kp_ = -0.5 * pd * ln_2pi;
  } else {
    log_kp_ = std::lgamma((nu_ + pd) / 2.0) - std::lgamma(nu_ / 2.0) -
              0.5 * pd * std::log(nu_ * pi);
  }
}

EllipticalModel EllipticalModel::gaussian(Vector mu, const SparsePrecision& precision) {
  return gaussian(std::move(mu), precision.to_dense());
}

EllipticalModel EllipticalModel::gaussian(Vector mu, Matrix precision) {
  return EllipticalModel(std::move(mu), std::move(precision), EllipticalGenerator::gaussian, 0.0);
}

EllipticalModel EllipticalModel::student_t(Vector mu, const SparsePrecision& precision, double nu) {
  return student_t(std::move(mu), precision.to_dense(), nu);
}

EllipticalModel EllipticalModel::student_t(Vector mu, Matrix precision, double nu) {
  if (!(nu > 2.0)) {
    throw invalid_input_error("student_t requires nu > 2 so the covariance exists, got nu=" +
                              std::to_string(nu));
  }
  // The input is the precision of the covariance; the scale matrix is
  // covariance * (nu - 2) / nu, so its inverse picks up the reciprocal factor.
  Matrix inverse_scale = precision * (nu / (nu - 2.0));
  return EllipticalModel(std::move(mu), std::move(inverse_scale), EllipticalGenerator::student_t, nu);
}

double EllipticalModel::log_density(const Vector& x) const {
  if (x.size() != mu_.size()) {
    throw invalid_input_error("point dimension " + std::to_string(x.size()) +
                              " does not match model dimension " + std::to_string(mu_.size()));
  }
  const Vector centered = x - mu_;
  const double d2 = centered.dot(inverse_scale_ * centered);
  if (generator_ == EllipticalGenerator::gaussian) {
    return log_kp_ + half_logdet_ - 0.5 * d2;
  }
  const double pd = static_cast<double>(mu_.size());
  return log_kp_ + half_logdet_ - 0.5 * (nu_ + pd) * std::log1p(d2 / nu_);
}

double elliptical_density(const Vector& x, const EllipticalModel& model) {
  return std::exp(model.log_density(x));
}

double RegressionModel::predict(const Vector& x) const {
  double result = intercept;
  std::size_t slot = 0;
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (j == target) continue;
    result += coefficients[slot++] * x(j);
  }
  return result;
}

RegressionModel ifn_regression(int target, const Vector& mu, const SparsePrecision& precision) {
  const int p = precision.p();
  if (target < 0 || target >= p) {
    throw invalid_input_error("regression target " + std::to_string(target) +
                              " out of range for p=" + std::to_string(p));
  }
  if (mu.size() != p) {
    throw invalid_input_error("mean vector size " + std::to_string(mu.size()) +
                              " does not match precision on " + std::to_string(p) + " variables");
  }
  const double jyy = precision.at(target, target);
  if (!(jyy > 0.0)) {
    throw numeric_error("precision diagonal at target " + std::to_string(target) +
                        " must be positive, got " + std::to_string(jyy));
  }

  RegressionModel model;
  model.target = target;
  model.coefficients.reserve(static_cast<std::size_t>(p) - 1);
  double mean_shift = 0.0;
  for (int j = 0; j < p; ++j) {
    if (j == target) continue;
    const double beta = -precision.at(target, j) / jyy;
    model.coefficients.push_back(beta);
    mean_shift += beta * mu(j);
  }
  model.intercept = mu(target) - mean_shift;
  model.residual_variance = 1.0 / jyy;
  return model;
}

}  // namespace ifn
