#include "ifn/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace ifn {
namespace {

std::string describe_members(const std::vector<int>& members) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out << ",";
    out << members[i];
  }
  out << "}";
  return out.str();
}

/// Union-find over clique indices, used for forest checks.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

DataMatrix::DataMatrix(Matrix values, std::vector<std::string> names)
    : values_(std::move(values)), names_(std::move(names)) {
  if (values_.rows() < 2) {
    throw invalid_input_error("data matrix needs at least 2 rows, got " +
                              std::to_string(values_.rows()));
  }
  if (values_.cols() < 2) {
    throw invalid_input_error("data matrix needs at least 2 columns, got " +
                              std::to_string(values_.cols()));
  }
  if (!values_.allFinite()) {
    for (Eigen::Index i = 0; i < values_.rows(); ++i) {
      for (Eigen::Index j = 0; j < values_.cols(); ++j) {
        if (!std::isfinite(values_(i, j))) {
          throw invalid_input_error("non-finite data value at row " + std::to_string(i) +
                                    ", column " + std::to_string(j));
        }
      }
    }
  }
  if (names_.empty()) {
    names_.reserve(static_cast<std::size_t>(values_.cols()));
    for (Eigen::Index j = 0; j < values_.cols(); ++j) {
      names_.push_back("v" + std::to_string(j));
    }
  }
  if (static_cast<Eigen::Index>(names_.size()) != values_.cols()) {
    throw invalid_input_error("data matrix has " + std::to_string(values_.cols()) +
                              " columns but " + std::to_string(names_.size()) + " names");
  }
}

WeightMatrix::WeightMatrix(Matrix values, WeightKind kind) : values_(std::move(values)), kind_(kind) {
  if (values_.rows() != values_.cols()) {
    throw invalid_input_error("weight matrix must be square, got " + std::to_string(values_.rows()) +
                              "x" + std::to_string(values_.cols()));
  }
  if (values_.rows() < 1) {
    throw invalid_input_error("weight matrix must have at least one row");
  }
  if (!values_.allFinite()) {
    throw invalid_input_error("weight matrix contains non-finite entries");
  }
  asymmetry_ = (values_ - values_.transpose()).cwiseAbs().maxCoeff();
  values_ = ((values_ + values_.transpose()) / 2.0).eval();

  const int n = p();
  if (kind_ == WeightKind::correlation) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(values_(i, i) - 1.0) > 1e-9) {
        throw invalid_input_error("correlation matrix diagonal entry " + std::to_string(i) +
                                  " is not 1");
      }
      for (int j = 0; j < n; ++j) {
        if (std::abs(values_(i, j)) > 1.0 + 1e-9) {
          throw invalid_input_error("correlation matrix entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") outside [-1, 1]");
        }
      }
    }
  } else if (kind_ == WeightKind::squared_correlation || kind_ == WeightKind::generic_similarity) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (values_(i, j) < 0.0) {
          throw invalid_weight_error("negative similarity at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
        }
      }
    }
  }
}

FilteredGraph::FilteredGraph(int p, std::vector<Edge> edges) : p_(p), edges_(std::move(edges)) {
  if (p_ < 1) {
    throw invalid_input_error("graph needs at least one vertex");
  }
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) {
      throw invalid_input_error("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= p_) {
      throw invalid_input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") out of range for p=" + std::to_string(p_));
    }
    if (!std::isfinite(e.w)) {
      throw invalid_input_error("non-finite weight on edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (const auto& e : edges_) {
    if (!index_.emplace(std::make_pair(e.u, e.v), e.w).second) {
      throw invalid_input_error("duplicate edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
    }
  }
}

bool FilteredGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return index_.count(std::make_pair(u, v)) > 0;
}

double FilteredGraph::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = index_.find(std::make_pair(u, v));
  return it == index_.end() ? 0.0 : it->second;
}

double FilteredGraph::total_weight() const {
  double sum = 0.0;
  for (const auto& e : edges_) sum += e.w;
  return sum;
}

std::vector<int> FilteredGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(p_), 0);
  for (const auto& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

std::vector<std::vector<int>> FilteredGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(p_));
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;  // edges_ is sorted by (u, v), so each list comes out ascending
}

CliqueTree::CliqueTree(int p, std::vector<std::vector<int>> cliques, std::vector<Separator> separators)
    : p_(p), cliques_(std::move(cliques)), separators_(std::move(separators)) {
  validate();
}

std::map<std::vector<int>, int> CliqueTree::separator_multiplicity() const {
  std::map<std::vector<int>, int> counts;
  for (const auto& s : separators_) ++counts[s.members];
  return counts;
}

FilteredGraph CliqueTree::reconstruct(const WeightMatrix& w) const {
  if (w.p() != p_) {
    throw invalid_input_error("weight matrix size " + std::to_string(w.p()) +
                              " does not match clique tree on " + std::to_string(p_) + " vertices");
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& c : cliques_) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        pairs.emplace(c[i], c[j]);
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    edges.push_back(Edge{u, v, w(u, v)});
  }
  return FilteredGraph(p_, std::move(edges));
}

void CliqueTree::validate() const {
  if (p_ < 1) {
    throw invalid_input_error("clique tree needs at least one vertex");
  }
  std::vector<bool> covered(static_cast<std::size_t>(p_), false);
  for (const auto& c : cliques_) {
    if (c.empty()) {
      throw invalid_input_error("clique tree contains an empty clique");
    }
    if (!std::is_sorted(c.begin(), c.end()) ||
        std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw invalid_input_error("clique " + describe_members(c) +
                                " is not a sorted duplicate-free member list");
    }
    if (c.front() < 0 || c.back() >= p_) {
      throw invalid_input_error("clique " + describe_members(c) + " out of vertex range");
    }
    for (int v : c) covered[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < p_; ++v) {
    if (!covered[static_cast<std::size_t>(v)]) {
      throw invalid_input_error("vertex " + std::to_string(v) + " is in no clique");
    }
  }

  const auto n_cliques = cliques_.size();
  DisjointSets forest(n_cliques);
  for (const auto& s : separators_) {
    if (s.parent < 0 || s.parent >= static_cast<int>(n_cliques) || s.child < 0 ||
        s.child >= static_cast<int>(n_cliques) || s.parent == s.child) {
      throw invalid_input_error("separator " + describe_members(s.members) +
                                " has invalid clique indices");
    }
    if (s.members.empty() || !std::is_sorted(s.members.begin(), s.members.end())) {
      throw invalid_input_error("separator between cliques " + std::to_string(s.parent) + " and " +
                                std::to_string(s.child) + " has an invalid member list");
    }
    const auto& parent = cliques_[static_cast<std::size_t>(s.parent)];
    const auto& child = cliques_[static_cast<std::size_t>(s.child)];
    std::vector<int> expect;
    std::set_intersection(parent.begin(), parent.end(), child.begin(), child.end(),
                          std::back_inserter(expect));
    if (expect != s.members) {
      throw invalid_input_error("separator " + describe_members(s.members) +
                                " does not equal the intersection of cliques " +
                                std::to_string(s.parent) + " and " + std::to_string(s.child));
    }
    if (s.members.size() >= parent.size() || s.members.size() >= child.size()) {
      throw not_chordal_error("separator " + describe_members(s.members) +
                              " is not strictly contained in both cliques");
    }
    if (!forest.merge(static_cast<std::size_t>(s.parent), static_cast<std::size_t>(s.child))) {
      throw invalid_input_error("separators form a cycle through clique " +
                                std::to_string(s.parent));
    }
  }

  // Running intersection: the cliques containing any vertex form a connected
  // subtree under the separator edges that also contain that vertex.
  for (int v = 0; v < p_; ++v) {
    std::vector<std::size_t> holders;
    for (std::size_t ci = 0; ci < n_cliques; ++ci) {
      if (std::binary_search(cliques_[ci].begin(), cliques_[ci].end(), v)) holders.push_back(ci);
    }
    if (holders.size() <= 1) continue;
    DisjointSets sub(n_cliques);
    for (const auto& s : separators_) {
      if (std::binary_search(s.members.begin(), s.members.end(), v)) {
        sub.merge(static_cast<std::size_t>(s.parent), static_cast<std::size_t>(s.child));
      }
    }
    const std::size_t root = sub.find(holders.front());
    for (std::size_t h : holders) {
      if (sub.find(h) != root) {
        throw not_chordal_error("cliques containing vertex " + std::to_string(v) +
                                " do not form a connected subtree");
      }
    }
  }
}

}  // namespace ifn
