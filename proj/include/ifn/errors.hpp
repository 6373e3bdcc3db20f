#pragma once

#include <stdexcept>
#include <string>

namespace ifn {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-domain input (dimensions, non-finite values, bad ranges).
class invalid_input_error : public error {
 public:
  using error::error;
};

/// Weight matrix violates the requirements of the requested operation
/// (e.g. non-positive off-diagonal weights for a greedy constructor).
class invalid_weight_error : public error {
 public:
  using error::error;
};

/// A variable with zero variance where positive variance is required.
class degenerate_variable_error : public error {
 public:
  using error::error;
};

/// A graph that must be chordal is not.
class not_chordal_error : public error {
 public:
  using error::error;
};

/// Invalid configuration (parameter combinations, enum values).
class config_error : public error {
 public:
  using error::error;
};

/// Numerical failure: singular or non-positive-definite submatrix, failed
/// factorization, quantity outside its numeric domain.
class numeric_error : public error {
 public:
  using error::error;
};

/// Unbounded quantity (e.g. mutual information at |rho| >= 1).
class divergence_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

/// Centrality score that is undefined for the given graph (e.g. eigenvector
/// centrality of an edgeless graph).
class undefined_centrality_error : public invalid_input_error {
 public:
  using invalid_input_error::invalid_input_error;
};

}  // namespace ifn
