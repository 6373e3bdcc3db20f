#include "ifn/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace ifn {
namespace {

using nlohmann::json;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> split_on(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto end = line.find(sep, start);
    if (end == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

std::string trimmed(const std::string& s) {
  std::string::size_type a = 0;
  std::string::size_type b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_real(const std::string& field, const std::string& where) {
  const std::string cell = trimmed(field);
  if (cell.empty()) {
    throw invalid_input_error(where + ": empty numeric field");
  }
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) {
    throw invalid_input_error(where + ": '" + cell + "' is not a number");
  }
  if (!std::isfinite(value)) {
    throw invalid_input_error(where + ": '" + cell + "' is not a finite number");
  }
  return value;
}

void require_distinct_names(const std::vector<std::string>& names, const std::string& what) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw invalid_input_error(what + " contains duplicate name '" + name + "'");
    }
  }
}

void check_names_cover(const std::vector<std::string>& names, int p, const std::string& what) {
  if (static_cast<int>(names.size()) != p) {
    throw invalid_input_error(what + ": " + std::to_string(names.size()) + " names for " +
                              std::to_string(p) + " vertices");
  }
  require_distinct_names(names, what);
}

std::map<std::string, int> name_index(const std::vector<std::string>& names) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    index.emplace(names[i], static_cast<int>(i));
  }
  return index;
}

int lookup_name(const std::map<std::string, int>& index, const std::string& name,
                const std::string& where) {
  const auto it = index.find(name);
  if (it == index.end()) {
    throw invalid_input_error(where + ": unknown name '" + name + "'");
  }
  return it->second;
}

const char* const final_node_id = "__final__";

std::string hnn_node_id(const HnnNode& node, const std::vector<std::string>& names) {
  if (node.members.empty()) return final_node_id;
  std::string id;
  for (std::size_t i = 0; i < node.members.size(); ++i) {
    if (i > 0) id += '-';
    id += names[static_cast<std::size_t>(node.members[i])];
  }
  return id;
}

}  // namespace

std::string format_real(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw invalid_input_error("cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw invalid_input_error("cannot write file '" + path + "'");
  }
  out << content;
  out.flush();
  if (!out) {
    throw invalid_input_error("failed while writing file '" + path + "'");
  }
}

CsvTable read_csv(const std::string& path, bool header) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  std::size_t row = 0;
  CsvTable table;
  if (header) {
    if (lines.empty()) {
      throw invalid_input_error("file '" + path + "' is empty but a header row was expected");
    }
    for (const auto& field : split_on(lines[0], ',')) {
      table.names.push_back(trimmed(field));
    }
    require_distinct_names(table.names, "header of '" + path + "'");
    row = 1;
  }

  std::vector<std::vector<double>> body;
  for (; row < lines.size(); ++row) {
    const std::string where = "'" + path + "' line " + std::to_string(row + 1);
    const std::vector<std::string> fields = split_on(lines[row], ',');
    if (fields.size() == 1 && trimmed(fields[0]).empty()) {
      throw invalid_input_error(where + ": blank line");
    }
    std::vector<double> values;
    values.reserve(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) {
      values.push_back(parse_real(fields[j], where + ", column " + std::to_string(j + 1)));
    }
    if (!body.empty() && values.size() != body.front().size()) {
      throw invalid_input_error(where + ": expected " + std::to_string(body.front().size()) +
                                " fields, found " + std::to_string(values.size()));
    }
    body.push_back(std::move(values));
  }
  if (body.empty()) {
    throw invalid_input_error("file '" + path + "' has no data rows");
  }
  if (!table.names.empty() && table.names.size() != body.front().size()) {
    throw invalid_input_error("file '" + path + "': header has " +
                              std::to_string(table.names.size()) + " names but rows have " +
                              std::to_string(body.front().size()) + " fields");
  }

  table.values.resize(static_cast<Eigen::Index>(body.size()),
                      static_cast<Eigen::Index>(body.front().size()));
  for (std::size_t i = 0; i < body.size(); ++i) {
    for (std::size_t j = 0; j < body[i].size(); ++j) {
      table.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = body[i][j];
    }
  }
  return table;
}

DataMatrix read_data_csv(const std::string& path, bool header) {
  CsvTable table = read_csv(path, header);
  return DataMatrix(std::move(table.values), std::move(table.names));
}

WeightMatrix read_matrix_csv(const std::string& path, bool header, WeightKind kind) {
  CsvTable table = read_csv(path, header);
  if (table.values.rows() != table.values.cols()) {
    throw invalid_input_error("file '" + path + "': matrix body is " +
                              std::to_string(table.values.rows()) + "x" +
                              std::to_string(table.values.cols()) + ", expected square");
  }
  return WeightMatrix(std::move(table.values), kind);
}

std::string serialize_edge_list(const FilteredGraph& g, const std::vector<std::string>& names) {
  check_names_cover(names, g.p(), "edge list");
  std::vector<std::pair<std::pair<std::string, std::string>, double>> rows;
  rows.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    std::string a = names[static_cast<std::size_t>(e.u)];
    std::string b = names[static_cast<std::size_t>(e.v)];
    if (b < a) std::swap(a, b);
    rows.push_back({{std::move(a), std::move(b)}, e.w});
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::string out;
  for (const auto& [pair, w] : rows) {
    out += pair.first;
    out += '\t';
    out += pair.second;
    out += '\t';
    out += format_real(w);
    out += '\n';
  }
  return out;
}

NamedGraph parse_edge_list(const std::string& text) {
  struct Row {
    std::string a, b;
    double w;
  };
  std::vector<Row> rows;
  std::set<std::string> name_set;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string where = "edge list line " + std::to_string(i + 1);
    const std::vector<std::string> fields = split_on(lines[i], '\t');
    if (fields.size() != 3) {
      throw invalid_input_error(where + ": expected name<TAB>name<TAB>weight, found " +
                                std::to_string(fields.size()) + " fields");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw invalid_input_error(where + ": empty endpoint name");
    }
    if (fields[0] == fields[1]) {
      throw invalid_input_error(where + ": self-loop on '" + fields[0] + "'");
    }
    rows.push_back(Row{fields[0], fields[1], parse_real(fields[2], where)});
    name_set.insert(fields[0]);
    name_set.insert(fields[1]);
  }
  if (rows.empty()) {
    throw invalid_input_error("edge list has no edges");
  }
  std::vector<std::string> names(name_set.begin(), name_set.end());
  const std::map<std::string, int> index = name_index(names);
  std::vector<Edge> edges;
  edges.reserve(rows.size());
  for (const auto& row : rows) {
    int u = index.at(row.a);
    int v = index.at(row.b);
    if (v < u) std::swap(u, v);
    edges.push_back(Edge{u, v, row.w});
  }
  return NamedGraph{FilteredGraph(static_cast<int>(names.size()), std::move(edges)),
                    std::move(names)};
}

std::string serialize_clique_tree(const CliqueTree& tree, const std::vector<std::string>& names) {
  check_names_cover(names, tree.p(), "clique tree");
  json doc;
  doc["vertices"] = names;
  json cliques = json::array();
  for (const auto& clique : tree.cliques()) {
    json members = json::array();
    for (int v : clique) members.push_back(names[static_cast<std::size_t>(v)]);
    cliques.push_back(std::move(members));
  }
  doc["cliques"] = std::move(cliques);
  json separators = json::array();
  for (const auto& s : tree.separators()) {
    json members = json::array();
    for (int v : s.members) members.push_back(names[static_cast<std::size_t>(v)]);
    separators.push_back(json{{"members", std::move(members)}, {"parent", s.parent},
                              {"child", s.child}});
  }
  doc["separators"] = std::move(separators);
  return doc.dump(2) + "\n";
}

NamedCliqueTree parse_clique_tree(const std::string& text) {
  try {
    const json doc = json::parse(text);
    std::vector<std::string> names = doc.at("vertices").get<std::vector<std::string>>();
    require_distinct_names(names, "clique-tree vertices");
    const std::map<std::string, int> index = name_index(names);

    std::vector<std::vector<int>> cliques;
    for (const auto& entry : doc.at("cliques")) {
      std::vector<int> clique;
      for (const auto& name : entry) {
        clique.push_back(lookup_name(index, name.get<std::string>(), "clique-tree cliques"));
      }
      std::sort(clique.begin(), clique.end());
      cliques.push_back(std::move(clique));
    }
    std::vector<Separator> separators;
    for (const auto& entry : doc.at("separators")) {
      Separator s;
      for (const auto& name : entry.at("members")) {
        s.members.push_back(lookup_name(index, name.get<std::string>(), "clique-tree separators"));
      }
      std::sort(s.members.begin(), s.members.end());
      s.parent = entry.at("parent").get<int>();
      s.child = entry.at("child").get<int>();
      separators.push_back(std::move(s));
    }
    CliqueTree tree(static_cast<int>(names.size()), std::move(cliques), std::move(separators));
    return NamedCliqueTree{std::move(tree), std::move(names)};
  } catch (const json::exception& e) {
    throw invalid_input_error(std::string("clique-tree document is malformed: ") + e.what());
  }
}

std::string serialize_precision(const SparsePrecision& j, const std::vector<std::string>& names) {
  check_names_cover(names, j.p(), "precision");
  std::string out;
  for (const auto& [key, value] : j.entries()) {
    out += names[static_cast<std::size_t>(key.first)];
    out += '\t';
    out += names[static_cast<std::size_t>(key.second)];
    out += '\t';
    out += format_real(value);
    out += '\n';
  }
  return out;
}

NamedPrecision parse_precision(const std::string& text) {
  struct Row {
    std::string a, b;
    double value;
  };
  std::vector<Row> rows;
  std::vector<std::string> names;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string where = "precision line " + std::to_string(i + 1);
    const std::vector<std::string> fields = split_on(lines[i], '\t');
    if (fields.size() != 3) {
      throw invalid_input_error(where + ": expected name<TAB>name<TAB>value, found " +
                                std::to_string(fields.size()) + " fields");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw invalid_input_error(where + ": empty name");
    }
    rows.push_back(Row{fields[0], fields[1], parse_real(fields[2], where)});
    if (fields[0] == fields[1]) names.push_back(fields[0]);
  }
  if (names.empty()) {
    throw invalid_input_error("precision file has no diagonal entries (every vertex needs one)");
  }
  require_distinct_names(names, "precision diagonal");
  const std::map<std::string, int> index = name_index(names);

  std::map<std::pair<int, int>, double> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "precision line " + std::to_string(i + 1);
    const int a = lookup_name(index, rows[i].a, where);
    const int b = lookup_name(index, rows[i].b, where);
    if (a > b) {
      throw invalid_input_error(where + ": entries must be ordered i <= j, found ('" + rows[i].a +
                                "', '" + rows[i].b + "')");
    }
    if (!entries.emplace(std::make_pair(a, b), rows[i].value).second) {
      throw invalid_input_error(where + ": duplicate entry ('" + rows[i].a + "', '" + rows[i].b +
                                "')");
    }
  }
  return NamedPrecision{SparsePrecision(static_cast<int>(names.size()), std::move(entries)),
                        std::move(names)};
}

std::string serialize_hnn(const HnnSpec& spec, const std::vector<std::string>& names) {
  check_names_cover(names, spec.p, "hnn");
  for (const auto& name : names) {
    if (name == final_node_id) {
      throw invalid_input_error(std::string("hnn: vertex name collides with the reserved id '") +
                                final_node_id + "'");
    }
  }
  std::vector<std::string> ids;
  ids.reserve(spec.nodes.size());
  std::set<std::string> seen;
  for (const auto& node : spec.nodes) {
    std::string id = hnn_node_id(node, names);
    if (!seen.insert(id).second) {
      throw invalid_input_error("hnn: node id '" + id +
                                "' is ambiguous (vertex names collide when dash-joined)");
    }
    ids.push_back(std::move(id));
  }

  json doc;
  doc["mode"] = spec.mode == HnnMode::layered ? "layered" : "flat";
  doc["max_dimension"] = spec.max_dimension;
  json nodes = json::array();
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    const HnnNode& node = spec.nodes[i];
    json members = json::array();
    for (int v : node.members) members.push_back(names[static_cast<std::size_t>(v)]);
    nodes.push_back(json{{"id", ids[i]},
                         {"members", std::move(members)},
                         {"layer", node.layer},
                         {"annotation", node.annotation}});
  }
  doc["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [src, dst] : spec.edges) {
    edges.push_back(json::array({ids[static_cast<std::size_t>(src)],
                                 ids[static_cast<std::size_t>(dst)]}));
  }
  doc["edges"] = std::move(edges);
  doc["final"] = ids[static_cast<std::size_t>(spec.final_node)];
  return doc.dump(2) + "\n";
}

NamedHnn parse_hnn(const std::string& text) {
  try {
    const json doc = json::parse(text);
    HnnSpec spec;
    const std::string mode = doc.at("mode").get<std::string>();
    if (mode == "layered") {
      spec.mode = HnnMode::layered;
    } else if (mode == "flat") {
      spec.mode = HnnMode::flat;
    } else {
      throw invalid_input_error("hnn document: unknown mode '" + mode + "'");
    }
    spec.max_dimension = doc.at("max_dimension").get<int>();

    // Vertex names come from the layer-0 single-member nodes, in node order.
    std::vector<std::string> names;
    for (const auto& entry : doc.at("nodes")) {
      if (entry.at("layer").get<int>() == 0 && entry.at("members").size() == 1) {
        names.push_back(entry.at("members").front().get<std::string>());
      }
    }
    require_distinct_names(names, "hnn vertices");
    const std::map<std::string, int> index = name_index(names);
    spec.p = static_cast<int>(names.size());

    std::map<std::string, int> node_of_id;
    int final_index = -1;
    for (const auto& entry : doc.at("nodes")) {
      HnnNode node;
      for (const auto& name : entry.at("members")) {
        node.members.push_back(lookup_name(index, name.get<std::string>(), "hnn node members"));
      }
      std::sort(node.members.begin(), node.members.end());
      node.layer = entry.at("layer").get<int>();
      if (entry.contains("annotation")) node.annotation = entry.at("annotation").get<std::string>();
      const std::string id = entry.at("id").get<std::string>();
      if (!node_of_id.emplace(id, static_cast<int>(spec.nodes.size())).second) {
        throw invalid_input_error("hnn document: duplicate node id '" + id + "'");
      }
      if (id == final_node_id) final_index = static_cast<int>(spec.nodes.size());
      spec.nodes.push_back(std::move(node));
    }
    const std::string final_id = doc.at("final").get<std::string>();
    const auto final_it = node_of_id.find(final_id);
    if (final_it == node_of_id.end()) {
      throw invalid_input_error("hnn document: final node '" + final_id + "' is not in nodes");
    }
    spec.final_node = final_it->second;
    if (final_index >= 0 && final_index != spec.final_node) {
      throw invalid_input_error("hnn document: final node id mismatch");
    }

    for (const auto& entry : doc.at("edges")) {
      if (entry.size() != 2) {
        throw invalid_input_error("hnn document: edges must be [source, target] pairs");
      }
      const auto src = node_of_id.find(entry.at(0).get<std::string>());
      const auto dst = node_of_id.find(entry.at(1).get<std::string>());
      if (src == node_of_id.end() || dst == node_of_id.end()) {
        throw invalid_input_error("hnn document: edge references an unknown node id");
      }
      spec.edges.emplace_back(src->second, dst->second);
    }
    return NamedHnn{std::move(spec), std::move(names)};
  } catch (const json::exception& e) {
    throw invalid_input_error(std::string("hnn document is malformed: ") + e.what());
  }
}

}  // namespace ifn
