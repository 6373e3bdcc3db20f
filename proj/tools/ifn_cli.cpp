// Command-line front end: builds filtered networks from CSV data, assembles
// sparse precisions over clique trees, runs bootstrap edge validation, and
// exports network architectures.  Exit codes: 0 success, 1 usage error,
// 2 data error, 3 numeric error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ifn/analysis.hpp"
#include "ifn/chordal.hpp"
#include "ifn/construct.hpp"
#include "ifn/ensemble.hpp"
#include "ifn/errors.hpp"
#include "ifn/gain.hpp"
#include "ifn/hnn.hpp"
#include "ifn/io.hpp"
#include "ifn/logo.hpp"
#include "ifn/stats.hpp"

namespace {

using namespace ifn;

struct Options {
  std::string command;
  std::string input;
  std::string input_kind = "data";
  bool header = false;
  std::string method = "tmfg";
  std::string gain = "edge";
  int min_clique = 4;
  int max_clique = 4;
  std::string max_mult = "1";
  double threshold = 0.0;
  bool threshold_set = false;
  double shrinkage = 0.0;
  int replicas = 100;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  double subsample = 1.0;
  bool subsample_set = false;
  std::string mode = "layered";
  int dmax = 2;
  std::string out;
  std::string tree_out;
  std::string tree_in;

  bool gain_set = false;
  bool min_clique_set = false;
  bool max_clique_set = false;
  bool max_mult_set = false;
};

Method method_from_name(const std::string& name) {
  if (name == "mst" || name == "mst-prim") return Method::mst_prim;
  if (name == "mst-kruskal") return Method::mst_kruskal;
  if (name == "pmfg") return Method::pmfg;
  if (name == "tmfg") return Method::tmfg;
  return Method::mfcf;
}

GainKind gain_from_name(const std::string& name) {
  if (name == "sumsq") return GainKind::sum_squared_correlation;
  if (name == "mi") return GainKind::elliptical_mi;
  return GainKind::edge_weight;
}

std::optional<long long> parse_max_mult(const std::string& text, std::vector<std::string>& problems) {
  if (text == "inf") return std::nullopt;
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size() || value < 1) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    problems.push_back("--max-mult must be a positive integer or 'inf', got '" + text + "'");
    return 1;
  }
}

/// Cross-field checks, all collected into one report.
std::vector<std::string> validate(const Options& o) {
  std::vector<std::string> problems;
  const bool constructs = o.command != "logo";

  if (o.input.empty()) problems.push_back("--input is required");
  if (o.out.empty()) problems.push_back("--out is required");
  if (o.shrinkage < 0.0 || o.shrinkage > 1.0 || o.shrinkage != o.shrinkage) {
    problems.push_back("--shrinkage must lie in [0, 1]");
  }

  if (constructs) {
    const bool is_mfcf = o.method == "mfcf";
    if (!is_mfcf) {
      if (o.gain_set) problems.push_back("--gain only applies to --method mfcf");
      if (o.min_clique_set) problems.push_back("--min-clique only applies to --method mfcf");
      if (o.max_clique_set) problems.push_back("--max-clique only applies to --method mfcf");
      if (o.max_mult_set) problems.push_back("--max-mult only applies to --method mfcf");
      if (o.threshold_set) problems.push_back("--threshold only applies to --method mfcf");
    } else {
      if (o.min_clique < 2) problems.push_back("--min-clique must be >= 2");
      if (o.max_clique < o.min_clique) problems.push_back("--max-clique must be >= --min-clique");
      std::vector<std::string> mult_problems;
      parse_max_mult(o.max_mult, mult_problems);
      problems.insert(problems.end(), mult_problems.begin(), mult_problems.end());
    }
  }

  if (o.command == "build") {
    if (!o.tree_out.empty() && o.method == "pmfg") {
      problems.push_back("--tree is unavailable for --method pmfg (its output is not chordal in general)");
    }
  }
  if (o.command == "logo") {
    if (o.tree_in.empty()) problems.push_back("--tree is required");
  }
  if (o.command == "ensemble") {
    if (o.input_kind != "data") problems.push_back("ensemble requires --input-kind data (rows are resampled)");
    if (o.replicas < 1) problems.push_back("--replicas must be >= 1");
    if (o.alpha < 0.0 || o.alpha > 1.0 || o.alpha != o.alpha) {
      problems.push_back("--alpha must lie in [0, 1]");
    }
    if (o.subsample_set && (!(o.subsample > 0.0) || o.subsample > 1.0)) {
      problems.push_back("--subsample must lie in (0, 1]");
    }
  }
  if (o.command == "hnn") {
    if (o.dmax < 1) problems.push_back("--dmax must be >= 1");
  }
  return problems;
}

struct LoadedInput {
  std::optional<DataMatrix> data;           // when --input-kind data
  std::optional<WeightMatrix> matrix;       // when --input-kind matrix
  std::vector<std::string> names;
};

std::vector<std::string> synthetic_names(int p) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) names.push_back("v" + std::to_string(j));
  return names;
}

/// Reads the input file.  Matrix input is tagged `kind`; a warning is printed
/// when the body is asymmetric beyond tolerance (it is symmetrized).
LoadedInput load_input(const Options& o, WeightKind kind) {
  LoadedInput in;
  if (o.input_kind == "data") {
    in.data = read_data_csv(o.input, o.header);
    in.names = in.data->names();
    return in;
  }
  CsvTable table = read_csv(o.input, o.header);
  if (table.values.rows() != table.values.cols()) {
    throw invalid_input_error("file '" + o.input + "': matrix body is " +
                              std::to_string(table.values.rows()) + "x" +
                              std::to_string(table.values.cols()) + ", expected square");
  }
  in.names = table.names.empty() ? synthetic_names(static_cast<int>(table.values.cols()))
                                 : std::move(table.names);
  in.matrix.emplace(std::move(table.values), kind);
  if (in.matrix->asymmetry() > WeightMatrix::asymmetry_warn_threshold) {
    std::cerr << "warning: '" << o.input << "' is asymmetric (max |W_ij - W_ji| = "
              << format_real(in.matrix->asymmetry()) << "); symmetrized as (W + W^T)/2\n";
  }
  return in;
}

struct BuiltNetwork {
  FilteredGraph graph;
  std::optional<CliqueTree> tree;
};

/// Weights and (for the correlation-based gains) the correlation reference.
struct WeightPipeline {
  WeightMatrix weights;
  std::optional<WeightMatrix> correlation;
};

WeightPipeline assemble_weights(const Options& o, const LoadedInput& in, GainKind gain) {
  if (in.data) {
    const WeightMatrix cov = estimate_covariance(*in.data, o.shrinkage);
    WeightMatrix corr = covariance_to_correlation(cov);
    WeightMatrix weights = squared_correlation(corr);
    return WeightPipeline{std::move(weights), std::move(corr)};
  }
  // Matrix input: correlation-based gains need a correlation matrix, which
  // also supplies the squared-correlation weights; otherwise the matrix is
  // the weight matrix itself.
  if (gain == GainKind::sum_squared_correlation || gain == GainKind::elliptical_mi) {
    WeightMatrix corr(in.matrix->values(), WeightKind::correlation);
    WeightMatrix weights = squared_correlation(corr);
    return WeightPipeline{std::move(weights), std::move(corr)};
  }
  return WeightPipeline{*in.matrix, std::nullopt};
}

BuiltNetwork construct_network(const Options& o, const WeightPipeline& pipeline, bool want_tree) {
  const Method method = method_from_name(o.method);
  const GainKind gain = gain_from_name(o.gain);
  switch (method) {
    case Method::mst_prim:
    case Method::mst_kruskal: {
      FilteredGraph g = method == Method::mst_prim ? mst_prim(pipeline.weights)
                                                   : mst_kruskal(pipeline.weights);
      std::optional<CliqueTree> tree;
      if (want_tree) tree = extract_clique_tree(g);
      return BuiltNetwork{std::move(g), std::move(tree)};
    }
    case Method::pmfg:
      return BuiltNetwork{pmfg(pipeline.weights), std::nullopt};
    case Method::tmfg: {
      TmfgResult r = tmfg(pipeline.weights);
      return BuiltNetwork{std::move(r.graph), std::move(r.tree)};
    }
    case Method::mfcf:
      break;
  }
  GainSpec spec = GainSpec::edge_weight();
  if (gain == GainKind::sum_squared_correlation) {
    spec = GainSpec::sum_squared_correlation(*pipeline.correlation);
  } else if (gain == GainKind::elliptical_mi) {
    spec = GainSpec::elliptical_mi(*pipeline.correlation);
  }
  MfcfConfig cfg;
  cfg.min_clique = o.min_clique;
  cfg.max_clique = o.max_clique;
  std::vector<std::string> ignored;
  cfg.max_multiplicity = parse_max_mult(o.max_mult, ignored);
  if (o.threshold_set) cfg.gain_threshold = o.threshold;
  MfcfResult r = mfcf(pipeline.weights, spec, cfg);
  return BuiltNetwork{std::move(r.graph), std::move(r.tree)};
}

int run_build(const Options& o) {
  const LoadedInput in = load_input(o, WeightKind::generic_similarity);
  const WeightPipeline pipeline = assemble_weights(o, in, gain_from_name(o.gain));
  const BuiltNetwork net = construct_network(o, pipeline, !o.tree_out.empty());
  write_file(o.out, serialize_edge_list(net.graph, in.names));
  if (!o.tree_out.empty()) {
    write_file(o.tree_out, serialize_clique_tree(*net.tree, in.names));
  }
  return 0;
}

int run_logo(const Options& o) {
  const NamedCliqueTree named = parse_clique_tree(read_file(o.tree_in));
  const LoadedInput in = load_input(o, WeightKind::covariance);
  if (in.names != named.names) {
    throw invalid_input_error("variable names in '" + o.tree_in +
                              "' do not match the input columns of '" + o.input + "'");
  }
  const WeightMatrix cov = in.data ? estimate_covariance(*in.data) : *in.matrix;
  const SparsePrecision precision = logo_precision(cov, named.tree, o.shrinkage);
  write_file(o.out, serialize_precision(precision, in.names));
  return 0;
}

int run_ensemble(const Options& o) {
  const LoadedInput in = load_input(o, WeightKind::generic_similarity);
  BuildRecipe recipe;
  recipe.method = method_from_name(o.method);
  recipe.gain = gain_from_name(o.gain);
  recipe.shrinkage = o.shrinkage;
  if (recipe.method == Method::mfcf) {
    recipe.mfcf.min_clique = o.min_clique;
    recipe.mfcf.max_clique = o.max_clique;
    std::vector<std::string> ignored;
    recipe.mfcf.max_multiplicity = parse_max_mult(o.max_mult, ignored);
    if (o.threshold_set) recipe.mfcf.gain_threshold = o.threshold;
  }
  if (o.subsample_set) recipe.subsample_fraction = o.subsample;
  const EdgeEnsemble ensemble = bootstrap_ensemble(*in.data, o.replicas, recipe, o.seed);
  const FilteredGraph validated = validated_network(ensemble, o.alpha);
  write_file(o.out, serialize_edge_list(validated, in.names));
  return 0;
}

int run_hnn(const Options& o) {
  const LoadedInput in = load_input(o, WeightKind::generic_similarity);
  const WeightPipeline pipeline = assemble_weights(o, in, gain_from_name(o.gain));
  const BuiltNetwork net = construct_network(o, pipeline, false);
  const HnnMode mode = o.mode == "flat" ? HnnMode::flat : HnnMode::layered;
  const HnnSpec spec = export_hnn(net.graph, mode, o.dmax);
  write_file(o.out, serialize_hnn(spec, in.names));
  return 0;
}

void add_input_options(CLI::App* cmd, Options& o, bool allow_matrix) {
  cmd->add_option("--input", o.input, "Input CSV file");
  cmd->add_flag("--header", o.header, "First row of --input holds column names");
  if (allow_matrix) {
    cmd->add_option("--input-kind", o.input_kind, "Input payload: data (n x p observations) or matrix (p x p)")
        ->check(CLI::IsMember({"data", "matrix"}));
  }
  cmd->add_option("--shrinkage", o.shrinkage, "Shrinkage toward the diagonal, in [0, 1]");
}

void add_method_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "Construction method")
      ->check(CLI::IsMember({"mst", "mst-prim", "mst-kruskal", "pmfg", "tmfg", "mfcf"}));
  cmd->add_option("--gain", o.gain, "Gain function for mfcf: edge, sumsq, or mi")
      ->check(CLI::IsMember({"edge", "sumsq", "mi"}));
  cmd->add_option("--min-clique", o.min_clique, "Smallest clique size grown by mfcf");
  cmd->add_option("--max-clique", o.max_clique, "Largest clique size grown by mfcf");
  cmd->add_option("--max-mult", o.max_mult, "Separator reuse bound for mfcf: positive integer or 'inf'");
  cmd->add_option("--threshold", o.threshold, "Gain threshold below which mfcf starts a new component");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information filtering networks: sparse dependency structures from data"};
  app.require_subcommand(1);
  Options o;

  CLI::App* build = app.add_subcommand("build", "Filter a network from data and write its edge list");
  add_input_options(build, o, true);
  add_method_options(build, o);
  build->add_option("--out", o.out, "Edge-list output path");
  build->add_option("--tree", o.tree_out, "Clique-tree document output path (chordal methods)");

  CLI::App* logo = app.add_subcommand("logo", "Assemble a sparse precision over a clique tree");
  add_input_options(logo, o, true);
  logo->add_option("--tree", o.tree_in, "Clique-tree document produced by build");
  logo->add_option("--out", o.out, "Precision coordinate-file output path");

  CLI::App* ensemble = app.add_subcommand("ensemble", "Bootstrap replicas and keep statistically validated edges");
  add_input_options(ensemble, o, false);
  add_method_options(ensemble, o);
  ensemble->add_option("--replicas", o.replicas, "Number of bootstrap replicas");
  ensemble->add_option("--alpha", o.alpha, "Significance level for edge retention");
  ensemble->add_option("--seed", o.seed, "Master seed (decimal, 64-bit)");
  ensemble->add_option("--subsample", o.subsample, "Draw floor(f*n) distinct rows instead of n with replacement");
  ensemble->add_option("--out", o.out, "Validated edge-list output path");

  CLI::App* hnn = app.add_subcommand("hnn", "Build a network and export its architecture document");
  add_input_options(hnn, o, true);
  add_method_options(hnn, o);
  hnn->add_option("--mode", o.mode, "Wiring scheme: layered or flat")
      ->check(CLI::IsMember({"layered", "flat"}));
  hnn->add_option("--dmax", o.dmax, "Largest simplex dimension exported");
  hnn->add_option("--out", o.out, "Architecture document output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  CLI::App* active = app.get_subcommands().front();
  o.command = active->get_name();
  const auto given = [&](const std::string& name) {
    const CLI::Option* opt = active->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  o.gain_set = given("--gain");
  o.min_clique_set = given("--min-clique");
  o.max_clique_set = given("--max-clique");
  o.max_mult_set = given("--max-mult");
  o.threshold_set = given("--threshold");
  o.subsample_set = given("--subsample");

  const std::vector<std::string> problems = validate(o);
  if (!problems.empty()) {
    std::cerr << "configuration errors:\n";
    for (const auto& p : problems) std::cerr << "  - " << p << "\n";
    return 1;
  }

  try {
    if (o.command == "build") return run_build(o);
    if (o.command == "logo") return run_logo(o);
    if (o.command == "ensemble") return run_ensemble(o);
    return run_hnn(o);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ifn::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
}
