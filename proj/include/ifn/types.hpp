#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ifn/errors.hpp"

namespace ifn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Observation matrix: n rows (observations) by p columns (variables), with a
/// label per column.  Labels default to "v0".."v{p-1}" when none are given.
/// Requires n >= 2, p >= 2 and finite entries.
class DataMatrix {
 public:
  DataMatrix(Matrix values, std::vector<std::string> names = {});

  int n() const { return static_cast<int>(values_.rows()); }
  int p() const { return static_cast<int>(values_.cols()); }
  const Matrix& values() const { return values_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int j) const { return names_.at(static_cast<std::size_t>(j)); }

 private:
  Matrix values_;
  std::vector<std::string> names_;
};

/// Interpretation tag for a symmetric similarity matrix.
enum class WeightKind {
  covariance,
  correlation,
  squared_correlation,
  generic_similarity,
};

/// Symmetric p x p similarity matrix.  Inputs are symmetrized as
/// (W + W^T) / 2 at construction; the pre-symmetrization maximum asymmetry is
/// recorded so callers can warn when it exceeds tolerance (1e-9).
/// Kind-specific checks: correlation has unit diagonal and entries in [-1, 1];
/// squared_correlation and generic_similarity have non-negative off-diagonal
/// entries.
class WeightMatrix {
 public:
  WeightMatrix(Matrix values, WeightKind kind);

  int p() const { return static_cast<int>(values_.rows()); }
  const Matrix& values() const { return values_; }
  double operator()(int i, int j) const { return values_(i, j); }
  WeightKind kind() const { return kind_; }
  /// Maximum |W_ij - W_ji| observed before symmetrization.
  double asymmetry() const { return asymmetry_; }
  static constexpr double asymmetry_warn_threshold = 1e-9;

 private:
  Matrix values_;
  WeightKind kind_;
  double asymmetry_ = 0.0;
};

/// Undirected weighted edge with endpoints in canonical order u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double w = 0.0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
  }
};

/// Immutable undirected weighted graph on p vertices.  Edges are stored in
/// canonical order (u < v), sorted by (u, v), with no self-loops and no
/// duplicates.
class FilteredGraph {
 public:
  FilteredGraph(int p, std::vector<Edge> edges);

  int p() const { return p_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const;
  /// Weight of edge (u, v); 0 when absent.
  double weight(int u, int v) const;
  double total_weight() const;
  std::vector<int> degrees() const;
  /// Neighbor lists sorted ascending.
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const FilteredGraph& a, const FilteredGraph& b) {
    return a.p_ == b.p_ && a.edges_ == b.edges_;
  }

 private:
  int p_ = 0;
  std::vector<Edge> edges_;
  std::map<std::pair<int, int>, double> index_;  // canonical (u,v) -> weight
};

/// Separator between two cliques of a clique tree.  `members` equals the
/// intersection of the parent and child cliques and is strictly contained in
/// both.
struct Separator {
  std::vector<int> members;  // sorted ascending
  int parent = 0;            // clique index
  int child = 0;             // clique index

  friend bool operator==(const Separator& a, const Separator& b) {
    return a.members == b.members && a.parent == b.parent && a.child == b.child;
  }
};

/// Clique forest of a chordal graph: maximal cliques plus separators forming
/// one tree per connected component (|separators| = |cliques| - #components),
/// satisfying the running-intersection property.
class CliqueTree {
 public:
  CliqueTree(int p, std::vector<std::vector<int>> cliques, std::vector<Separator> separators);

  int p() const { return p_; }
  const std::vector<std::vector<int>>& cliques() const { return cliques_; }
  const std::vector<Separator>& separators() const { return separators_; }
  int components() const {
    return static_cast<int>(cliques_.size()) - static_cast<int>(separators_.size());
  }
  /// Per-separator-member-set usage count (identical member sets share a
  /// counter even when they separate different clique pairs).
  std::map<std::vector<int>, int> separator_multiplicity() const;
  /// Union of within-clique edges, weights taken from `w`.
  FilteredGraph reconstruct(const WeightMatrix& w) const;

  /// Checks every structural invariant (sorted member lists, vertex cover,
  /// strict separator containment, parent/child intersection, forest shape,
  /// running intersection); throws not_chordal_error / invalid_input_error.
  void validate() const;

  friend bool operator==(const CliqueTree& a, const CliqueTree& b) {
    return a.p_ == b.p_ && a.cliques_ == b.cliques_ && a.separators_ == b.separators_;
  }

 private:
  int p_ = 0;
  std::vector<std::vector<int>> cliques_;
  std::vector<Separator> separators_;
};

/// Simplices of a graph's clique complex, grouped by dimension
/// (by_dimension[d] lists the (d+1)-vertex complete subgraphs, each sorted,
/// the list sorted lexicographically).  Downward closed by construction.
struct SimplexSet {
  int p = 0;
  std::vector<std::vector<std::vector<int>>> by_dimension;

  std::size_t count(int dim) const {
    return dim < static_cast<int>(by_dimension.size())
               ? by_dimension[static_cast<std::size_t>(dim)].size()
               : 0u;
  }
};

}  // namespace ifn
