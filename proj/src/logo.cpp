#include "ifn/logo.hpp"

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

Matrix shrunk_submatrix(const Matrix& cov, const std::vector<int>& members, double shrinkage) {
  const auto k = static_cast<Eigen::Index>(members.size());
  Matrix sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      sub(i, j) = cov(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
    }
  }
  if (shrinkage > 0.0) {
    Matrix d = sub.diagonal().asDiagonal();
    sub = (1.0 - shrinkage) * sub + shrinkage * d;
  }
  return sub;
}

Eigen::LLT<Matrix> factor_submatrix(const Matrix& cov, const std::vector<int>& members,
                                    double shrinkage, const char* role) {
  Eigen::LLT<Matrix> llt(shrunk_submatrix(cov, members, shrinkage));
  if (llt.info() != Eigen::Success) {
    throw numeric_error(std::string(role) + " covariance submatrix " + describe_members(members) +
                        " is not positive definite");
  }
  return llt;
}

Matrix invert_submatrix(const Matrix& cov, const std::vector<int>& members, double shrinkage,
                        const char* role) {
  const auto llt = factor_submatrix(cov, members, shrinkage, role);
  const auto k = static_cast<Eigen::Index>(members.size());
  return llt.solve(Matrix::Identity(k, k));
}

void check_logo_inputs(const WeightMatrix& cov, const CliqueTree& tree, double shrinkage) {
  if (cov.p() != tree.p()) {
    throw invalid_input_error("covariance size " + std::to_string(cov.p()) +
                              " does not match clique tree on " + std::to_string(tree.p()) +
                              " vertices");
  }
  if (shrinkage < 0.0 || shrinkage > 1.0) {
    throw config_error("shrinkage must lie in [0, 1], got " + std::to_string(shrinkage));
  }
}

/// Adds sign * inv (indexed by `members`) into the entry map.
void accumulate(std::map<std::pair<int, int>, double>& entries, const std::vector<int>& members,
                const Matrix& inv, double sign) {
  const auto k = static_cast<Eigen::Index>(members.size());
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = a; b < k; ++b) {
      int i = members[static_cast<std::size_t>(a)];
      int j = members[static_cast<std::size_t>(b)];
      if (i > j) std::swap(i, j);
      entries[{i, j}] += sign * inv(a, b);
    }
  }
}

}  // namespace

SparsePrecision::SparsePrecision(int p, std::map<std::pair<int, int>, double> entries)
    : p_(p), entries_(std::move(entries)) {
  if (p_ < 1) {
    throw invalid_input_error("precision matrix needs at least one vertex");
  }
  for (const auto& [key, value] : entries_) {
    if (key.first < 0 || key.first > key.second || key.second >= p_) {
      throw invalid_input_error("precision entry (" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + ") out of range");
    }
    if (!std::isfinite(value)) {
      throw invalid_input_error("non-finite precision entry at (" + std::to_string(key.first) +
                                "," + std::to_string(key.second) + ")");
    }
  }
}

double SparsePrecision::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0.0 : it->second;
}

Matrix SparsePrecision::to_dense() const {
  Matrix m = Matrix::Zero(p_, p_);
  for (const auto& [key, value] : entries_) {
    m(key.first, key.second) = value;
    m(key.second, key.first) = value;
  }
  return m;
}

Vector SparsePrecision::apply(const Vector& x) const {
  if (x.size() != p_) {
    throw invalid_input_error("vector size " + std::to_string(x.size()) +
                              " does not match precision on " + std::to_string(p_) + " variables");
  }
  Vector y = Vector::Zero(p_);
  for (const auto& [key, value] : entries_) {
    y(key.first) += value * x(key.second);
    if (key.first != key.second) y(key.second) += value * x(key.first);
  }
  return y;
}

SparsePrecision logo_precision_serial(const WeightMatrix& cov, const CliqueTree& tree,
                                      double shrinkage) {
  check_logo_inputs(cov, tree, shrinkage);
  const Matrix& s = cov.values();
  std::map<std::pair<int, int>, double> entries;
  for (const auto& c : tree.cliques()) {
    accumulate(entries, c, invert_submatrix(s, c, shrinkage, "clique"), +1.0);
  }
  for (const auto& sep : tree.separators()) {
    accumulate(entries, sep.members, invert_submatrix(s, sep.members, shrinkage, "separator"), -1.0);
  }
  return SparsePrecision(tree.p(), std::move(entries));
}

SparsePrecision logo_precision(const WeightMatrix& cov, const CliqueTree& tree, double shrinkage) {
  check_logo_inputs(cov, tree, shrinkage);
  const Matrix& s = cov.values();
  const auto& cliques = tree.cliques();
  const auto& separators = tree.separators();
  const auto nc = static_cast<std::ptrdiff_t>(cliques.size());
  const auto ns = static_cast<std::ptrdiff_t>(separators.size());

  // Invert per-submatrix in parallel; merge serially in a fixed order so the
  // result is bit-identical to the serial variant for any thread count.
  std::vector<Matrix> clique_inv(static_cast<std::size_t>(nc));
  std::vector<Matrix> separator_inv(static_cast<std::size_t>(ns));
  std::exception_ptr failure = nullptr;

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < nc + ns; ++i) {
    try {
      if (i < nc) {
        clique_inv[static_cast<std::size_t>(i)] =
            invert_submatrix(s, cliques[static_cast<std::size_t>(i)], shrinkage, "clique");
      } else {
        separator_inv[static_cast<std::size_t>(i - nc)] = invert_submatrix(
            s, separators[static_cast<std::size_t>(i - nc)].members, shrinkage, "separator");
      }
    } catch (...) {
#if defined(_OPENMP)
#pragma omp critical
#endif
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::map<std::pair<int, int>, double> entries;
  for (std::ptrdiff_t i = 0; i < nc; ++i) {
    accumulate(entries, cliques[static_cast<std::size_t>(i)],
               clique_inv[static_cast<std::size_t>(i)], +1.0);
  }
  for (std::ptrdiff_t i = 0; i < ns; ++i) {
    accumulate(entries, separators[static_cast<std::size_t>(i)].members,
               separator_inv[static_cast<std::size_t>(i)], -1.0);
  }
  return SparsePrecision(tree.p(), std::move(entries));
}

double logo_logdet(const WeightMatrix& cov, const CliqueTree& tree, double shrinkage) {
  check_logo_inputs(cov, tree, shrinkage);
  const Matrix& s = cov.values();
  const auto logdet = [&s, shrinkage](const std::vector<int>& members, const char* role) {
    const auto llt = factor_submatrix(s, members, shrinkage, role);
    return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
  };
  double result = 0.0;
  for (const auto& c : tree.cliques()) result -= logdet(c, "clique");
  for (const auto& sep : tree.separators()) result += logdet(sep.members, "separator");
  return result;
}

double gaussian_loglik_decomposed(const DataMatrix& data, const Vector& mu, const WeightMatrix& cov,
                                  const CliqueTree& tree) {
  if (data.p() != tree.p() || mu.size() != tree.p() || cov.p() != tree.p()) {
    throw invalid_input_error("data, mean, covariance and clique tree sizes disagree");
  }
  const Matrix& x = data.values();
  const Matrix& s = cov.values();
  const double n = static_cast<double>(data.n());
  constexpr double ln_2pi = 1.8378770664093454836;

  const auto block_loglik = [&](const std::vector<int>& members, const char* role) {
    const auto k = static_cast<Eigen::Index>(members.size());
    const auto llt = factor_submatrix(s, members, 0.0, role);
    const double logdet = 2.0 * llt.matrixLLT().diagonal().array().log().sum();
    Matrix centered(x.rows(), k);
    for (Eigen::Index j = 0; j < k; ++j) {
      const int v = members[static_cast<std::size_t>(j)];
      centered.col(j) = x.col(v).array() - mu(v);
    }
    // Quadratic forms of all rows at once: || L^-1 (x - mu) ||^2 per row.
    Matrix solved = llt.matrixL().solve(centered.transpose());
    const double quad_total = solved.array().square().sum();
    return -0.5 * (n * (static_cast<double>(k) * ln_2pi + logdet) + quad_total);
  };

  double total = 0.0;
  for (const auto& c : tree.cliques()) total += block_loglik(c, "clique");
  for (const auto& sep : tree.separators()) total -= block_loglik(sep.members, "separator");
  return total;
}

}  // namespace ifn
