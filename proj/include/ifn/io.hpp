#pragma once

#include <string>
#include <vector>

#include "ifn/hnn.hpp"
#include "ifn/logo.hpp"
#include "ifn/types.hpp"

namespace ifn {

/// Formats a double with 17 significant digits (lossless round-trip).
std::string format_real(double x);

/// Parsed CSV payload: numeric body plus header names (empty when the file
/// had no header row).
struct CsvTable {
  Matrix values;
  std::vector<std::string> names;
};

/// Reads a comma-separated numeric file.  With `header`, the first row
/// supplies the column names.  Ragged rows, empty bodies, or non-numeric
/// cells raise invalid_input_error naming the line.
CsvTable read_csv(const std::string& path, bool header);

/// n x p observation CSV -> DataMatrix (synthetic names when no header).
DataMatrix read_data_csv(const std::string& path, bool header);

/// p x p symmetric matrix CSV -> WeightMatrix of the given kind.
WeightMatrix read_matrix_csv(const std::string& path, bool header, WeightKind kind);

/// One edge per line, `name_i<TAB>name_j<TAB>weight`, each edge oriented and
/// the lines sorted lexicographically by (name_i, name_j).
std::string serialize_edge_list(const FilteredGraph& g, const std::vector<std::string>& names);

/// Parsed edge list: vertices are the distinct endpoint names in
/// lexicographic order.
struct NamedGraph {
  FilteredGraph graph;
  std::vector<std::string> names;
};
NamedGraph parse_edge_list(const std::string& text);

/// Clique-tree document: `vertices` (names), `cliques` (arrays of names),
/// `separators` ({members, parent, child}).
std::string serialize_clique_tree(const CliqueTree& tree, const std::vector<std::string>& names);
struct NamedCliqueTree {
  CliqueTree tree;
  std::vector<std::string> names;
};
NamedCliqueTree parse_clique_tree(const std::string& text);

/// Precision coordinate lines `name_i<TAB>name_j<TAB>value` with i <= j by
/// index, including every diagonal entry.
std::string serialize_precision(const SparsePrecision& j, const std::vector<std::string>& names);
struct NamedPrecision {
  SparsePrecision precision;
  std::vector<std::string> names;
};
NamedPrecision parse_precision(const std::string& text);

/// Architecture document: `nodes` (id = dash-joined sorted member names,
/// members, layer, annotation), `edges` (id pairs), `final` (id), `mode`.
std::string serialize_hnn(const HnnSpec& spec, const std::vector<std::string>& names);
struct NamedHnn {
  HnnSpec spec;
  std::vector<std::string> names;
};
NamedHnn parse_hnn(const std::string& text);

/// Whole-file helpers.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ifn
