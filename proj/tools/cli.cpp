#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lohi/community.hpp"
#include "lohi/error.hpp"
#include "lohi/partition.hpp"
#include "lohi/sampler.hpp"

namespace lohi::cli {

namespace fs = std::filesystem;
using nlohmann::json;

json fixed(double x) {
  if (!std::isfinite(x)) return nullptr;
  double r = std::round(x * 1e6) / 1e6;
  if (r == 0.0) r = 0.0;  // drop negative zero
  return r;
}

json fixed(const std::optional<double>& x) { return x ? fixed(*x) : json(nullptr); }

json to_json(const PartitionReport& r) {
  return {{"nodes", r.nodes},
          {"edges", r.edges},
          {"communities", r.communities},
          {"modularity", fixed(r.modularity)},
          {"coverage", fixed(r.coverage)},
          {"performance", fixed(r.performance)},
          {"conductance_pairwise_max", fixed(r.conductance_pairwise_max)},
          {"conductance_lh", fixed(r.conductance_lh)}};
}

json to_json(const IngestionReport& r) {
  return {{"nodes_read", r.nodes_read},
          {"edges_read", r.edges_read},
          {"self_loops_dropped", r.self_loops_dropped},
          {"duplicates_dropped", r.duplicates_dropped},
          {"weighted_lines", r.weighted_lines},
          {"q", r.q},
          {"warnings", r.warnings}};
}

json to_json(const EstimationResult& r, int q) {
  return {{"beta_mpl", fixed(r.beta_mpl)},
          {"beta_used", fixed(r.beta_used)},
          {"beta_critical", fixed(critical_beta(q))},
          {"clamped", r.clamped},
          {"status", to_string(r.status)},
          {"iterations", r.iterations},
          {"residual", fixed(r.residual)},
          {"warnings", r.warnings}};
}

namespace {

const char* to_string(ClampMode m) { return m == ClampMode::critical ? "critical" : "none"; }

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create output directory " + dir.string() + ": " + ec.message());
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "";
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << (std::round(x * 1e6) / 1e6 == 0.0 ? 0.0 : x);
  return s.str();
}

std::string format_number(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

EdgeListFormat parse_format(const std::string& s) {
  return s == "csv" ? EdgeListFormat::csv : EdgeListFormat::whitespace;
}

std::vector<std::string> row_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

std::vector<std::string> subgraph_names(const LabeledSubgraph& sub,
                                        const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(sub.to_parent.size());
  for (NodeId p : sub.to_parent) out.push_back(names[p]);
  return out;
}

FeatureMatrix load_features(const std::string& path, const std::string& class_column) {
  try {
    return read_feature_csv(path, class_column);
  } catch (const ColumnNotFound& e) {
    throw UsageError(e.what());
  }
}

void check_k(int k, const FeatureMatrix& f) {
  if (k < 1 || static_cast<std::size_t>(k) >= f.rows) {
    throw UsageError("-k must satisfy 1 <= k < number of rows (" + std::to_string(f.rows) +
                     "), got " + std::to_string(k));
  }
}

struct KnnOptions {
  std::string csv;
  std::string class_column = "class";
  int k = 15;
  bool standardize = kDefaultStandardize;
  std::string metric = "euclidean";
  std::string out;
};

DistanceMetric parse_metric(const std::string& s) {
  return s == "manhattan" ? DistanceMetric::manhattan : DistanceMetric::euclidean;
}

int cmd_knn(const KnnOptions& o, std::ostream& out) {
  const FeatureMatrix f = load_features(o.csv, o.class_column);
  check_k(o.k, f);
  const LabeledGraph g = build_knn_graph(f, o.k, o.standardize, parse_metric(o.metric));
  const auto names = row_names(g.node_count());

  ensure_dir(o.out);
  write_subgraph(g, names, fs::path(o.out) / "graph.edges", GraphFileFormat::edge_list);
  {
    std::ofstream labels(fs::path(o.out) / "labels.txt");
    if (!labels) throw DataError("cannot write labels to " + o.out);
    for (std::size_t i = 0; i < f.rows; ++i) labels << names[i] << ' ' << f.classes[i] << '\n';
  }
  IngestionReport report;
  report.nodes_read = f.rows;
  report.edges_read = g.graph().edge_count();
  report.q = g.q();
  json j = {{"schema_version", kSchemaVersion},
            {"config",
             {{"csv", o.csv},
              {"class_column", o.class_column},
              {"k", o.k},
              {"standardize", o.standardize},
              {"metric", o.metric}}},
            {"features", f.cols},
            {"nodes", g.node_count()},
            {"edges", g.graph().edge_count()},
            {"communities", g.q()},
            {"ingestion", to_json(report)}};
  write_json(fs::path(o.out) / "ingest.json", j);
  out << j.dump(2) << '\n';
  return kSuccess;
}

struct GraphInput {
  std::string graph;
  std::string format = "whitespace";
};

NamedGraph load_graph(const GraphInput& in) { return read_edge_list(in.graph, parse_format(in.format)); }

struct CommunitiesOptions {
  GraphInput input;
  std::string out;
};

int cmd_communities(const CommunitiesOptions& o, std::ostream& out) {
  NamedGraph g = load_graph(o.input);
  const Partition p = detect_communities_cnm(g.graph);
  const double q = modularity(g.graph, p);
  json j = {{"schema_version", kSchemaVersion},
            {"config", {{"graph", o.input.graph}, {"format", o.input.format}}},
            {"communities", p.count()},
            {"modularity", fixed(q)},
            {"ingestion", to_json(g.report)}};
  if (!o.out.empty()) {
    ensure_dir(o.out);
    std::ofstream labels(fs::path(o.out) / "labels.txt");
    if (!labels) throw DataError("cannot write labels to " + o.out);
    for (NodeId i = 0; i < g.graph.node_count(); ++i) {
      labels << g.names[i] << ' ' << p.community(i) << '\n';
    }
    write_json(fs::path(o.out) / "communities.json", j);
  }
  out << j.dump(2) << '\n';
  return kSuccess;
}

struct LabeledInput {
  GraphInput graph;
  std::string labels;
};

struct EstimateOptions {
  LabeledInput input;
  std::string clamp = "none";
  EstimationConfig estimation;
  std::string out;
};

ClampMode parse_clamp(const std::string& s) {
  return s == "critical" ? ClampMode::critical : ClampMode::none;
}

json estimation_config_json(const EstimationConfig& c) {
  return {{"beta0", c.beta0},
          {"beta1", c.beta1},
          {"tol", c.tol},
          {"max_iter", c.max_iter},
          {"beta_max", c.beta_max},
          {"clamp", to_string(c.clamp)},
          {"allow_negative_beta", c.allow_negative}};
}

int cmd_estimate(EstimateOptions o, std::ostream& out) {
  NamedGraph g = load_graph(o.input.graph);
  const LabeledGraph lg = read_labels(o.input.labels, g);
  o.estimation.clamp = parse_clamp(o.clamp);
  const EstimationResult r = estimate_beta(lg, o.estimation);
  json config = estimation_config_json(o.estimation);
  config["graph"] = o.input.graph.graph;
  config["labels"] = o.input.labels;
  json j = {{"schema_version", kSchemaVersion},
            {"config", config},
            {"q", lg.q()},
            {"estimation", to_json(r, lg.q())}};
  if (!o.out.empty()) write_json(o.out, j);
  out << j.dump(2) << '\n';
  return kSuccess;
}

struct MetricsOptions {
  LabeledInput input;
  std::string out;
};

int cmd_metrics(const MetricsOptions& o, std::ostream& out) {
  NamedGraph g = load_graph(o.input.graph);
  const LabeledGraph lg = read_labels(o.input.labels, g);
  const PartitionReport r = evaluate_partition(lg.graph(), Partition::from_labels(lg));
  json j = {{"schema_version", kSchemaVersion},
            {"config", {{"graph", o.input.graph.graph}, {"labels", o.input.labels}}},
            {"metrics", to_json(r)}};
  if (!o.out.empty()) write_json(o.out, j);
  out << j.dump(2) << '\n';
  return kSuccess;
}

struct SampleOptions {
  int rows = 30;
  int cols = 30;
  bool open = false;
  SamplerConfig sampler;
  std::string out;
};

int cmd_sample(SampleOptions o, std::ostream& out) {
  if (!(o.sampler.beta >= 0.0)) throw UsageError("--beta must be >= 0");
  if (o.rows < 2 || o.cols < 2) throw UsageError("--rows and --cols must be >= 2");
  if (o.sampler.q < 2) throw UsageError("--q must be >= 2");
  if (o.sampler.burn_in >= o.sampler.sweeps) throw UsageError("--burn-in must be < --sweeps");

  const Graph grid = grid_graph(o.rows, o.cols, !o.open);
  const LabeledGraph g = gibbs_sample(grid, o.sampler);
  const auto names = row_names(g.node_count());
  ensure_dir(o.out);
  write_subgraph(g, names, fs::path(o.out) / "graph.edges", GraphFileFormat::edge_list);
  write_labels(g, names, fs::path(o.out) / "labels.txt");

  std::size_t agree = 0;
  for (const auto& e : g.graph().edges()) agree += g.label(e.u) == g.label(e.v);
  json j = {{"schema_version", kSchemaVersion},
            {"config",
             {{"rows", o.rows},
              {"cols", o.cols},
              {"torus", !o.open},
              {"q", o.sampler.q},
              {"beta", o.sampler.beta},
              {"sweeps", o.sampler.sweeps},
              {"burn_in", o.sampler.burn_in},
              {"seed", o.sampler.seed}}},
            {"nodes", g.node_count()},
            {"edges", g.graph().edge_count()},
            {"monochromatic_edge_fraction",
             fixed(static_cast<double>(agree) / static_cast<double>(g.graph().edge_count()))}};
  write_json(fs::path(o.out) / "sample.json", j);
  out << j.dump(2) << '\n';
  return kSuccess;
}

struct DecomposeOptions {
  GraphInput graph;
  std::string labels;
  bool cnm = false;
  std::string csv;
  std::string class_column = "class";
  int k = 15;
  bool standardize = kDefaultStandardize;
  std::string metric = "euclidean";
  double quantile = kDefaultQuantile;
  std::string clamp = "auto";
  EstimationConfig estimation;
  bool tensorial = false;
  double regularizer = kDefaultShapeRegularizer;
  std::string name;
  std::string out;
};

int cmd_decompose(DecomposeOptions o, std::ostream& out) {
  const bool from_csv = !o.csv.empty();
  if (from_csv == !o.graph.graph.empty()) {
    throw UsageError("give exactly one of --graph or --csv");
  }
  if (!from_csv && o.cnm == !o.labels.empty()) {
    throw UsageError("with --graph, give exactly one of --labels or --cnm");
  }
  if (!(o.quantile > 0.0 && o.quantile < 1.0)) throw UsageError("-p must lie in (0, 1)");
  if (!(o.regularizer > 0.0)) throw UsageError("--regularizer must be > 0");

  std::vector<std::string> names;
  std::optional<LabeledGraph> lg;
  json ingestion;
  std::string label_source;
  if (from_csv) {
    const FeatureMatrix f = load_features(o.csv, o.class_column);
    check_k(o.k, f);
    lg = build_knn_graph(f, o.k, o.standardize, parse_metric(o.metric));
    names = row_names(lg->node_count());
    label_source = "class-column";
    IngestionReport report;
    report.nodes_read = f.rows;
    report.edges_read = lg->graph().edge_count();
    report.q = lg->q();
    ingestion = to_json(report);
  } else {
    NamedGraph g = load_graph(o.graph);
    if (o.cnm) {
      lg = partition_to_labels(detect_communities_cnm(g.graph), g.graph);
      g.report.q = lg->q();
      label_source = "cnm";
    } else {
      lg = read_labels(o.labels, g);
      label_source = "file";
    }
    names = g.names;
    ingestion = to_json(g.report);
  }

  if (o.clamp == "auto") o.clamp = from_csv ? "none" : "critical";
  o.estimation.clamp = parse_clamp(o.clamp);

  PipelineConfig config;
  config.estimation = o.estimation;
  config.quantile = o.quantile;
  config.fisher.regularizer = o.regularizer;
  config.fisher.path = o.tensorial ? FisherPath::tensorial : FisherPath::direct;
  const PipelineResult r = run_lohi(*lg, config);
  const Decomposition& d = r.decomposition;

  const std::string network =
      !o.name.empty() ? o.name : fs::path(from_csv ? o.csv : o.graph.graph).stem().string();

  json cfg = estimation_config_json(o.estimation);
  cfg["network"] = network;
  cfg["graph"] = o.graph.graph;
  cfg["format"] = o.graph.format;
  cfg["labels"] = o.labels;
  cfg["label_source"] = label_source;
  cfg["csv"] = o.csv;
  cfg["class_column"] = from_csv ? json(o.class_column) : json(nullptr);
  cfg["k"] = from_csv ? json(o.k) : json(nullptr);
  cfg["standardize"] = from_csv ? json(o.standardize) : json(nullptr);
  cfg["metric"] = from_csv ? json(o.metric) : json(nullptr);
  cfg["quantile"] = o.quantile;
  cfg["regularizer"] = o.regularizer;
  cfg["fisher_path"] = o.tensorial ? "tensorial" : "direct";
  cfg["out"] = o.out;

  auto member_names = [&](const NodeSet& s) {
    json a = json::array();
    for (NodeId i : s) a.push_back(names[i]);
    return a;
  };

  json j = {{"schema_version", kSchemaVersion},
            {"config", cfg},
            {"ingestion", ingestion},
            {"q", lg->q()},
            {"beta_mpl", fixed(r.estimation.beta_mpl)},
            {"beta_used", fixed(r.estimation.beta_used)},
            {"clamped", r.estimation.clamped},
            {"estimation", to_json(r.estimation, lg->q())},
            {"threshold", fixed(d.threshold)},
            {"quantile", d.quantile},
            {"n_low", d.low_nodes.size()},
            {"n_high", d.high_nodes.size()},
            {"metrics",
             {{"original", to_json(r.original)},
              {"low", to_json(r.low)},
              {"high", to_json(r.high)}}},
            {"conductance_lh", fixed(r.original.conductance_lh)},
            {"low_nodes", member_names(d.low_nodes)},
            {"high_nodes", member_names(d.high_nodes)},
            {"warnings", r.warnings}};

  const fs::path dir(o.out);
  ensure_dir(dir);
  write_json(dir / "summary.json", j);

  {
    std::ofstream csv(dir / "nodes.csv");
    if (!csv) throw DataError("cannot write " + (dir / "nodes.csv").string());
    csv << "node,degree,phi,psi,shape,shape_normalized,is_high\n";
    for (NodeId i = 0; i < lg->node_count(); ++i) {
      const auto& n = r.info[i];
      csv << names[i] << ',' << lg->graph().degree(i) << ',' << format_number(n.phi) << ','
          << format_number(n.psi) << ',' << format_number(n.shape) << ','
          << format_number(n.shape_normalized) << ',' << (d.high_nodes.contains(i) ? 1 : 0)
          << '\n';
    }
  }
  {
    std::ofstream csv(dir / "metrics.csv");
    if (!csv) throw DataError("cannot write " + (dir / "metrics.csv").string());
    csv << "network,subgraph,nodes,edges,communities,modularity,coverage,performance,"
           "conductance_pairwise_max,conductance_lh\n";
    auto row = [&](const char* which, const PartitionReport& p) {
      csv << network << ',' << which << ',' << p.nodes << ',' << p.edges << ',' << p.communities
          << ',' << format_number(p.modularity) << ',' << format_number(p.coverage) << ','
          << format_number(p.performance) << ',' << format_number(p.conductance_pairwise_max)
          << ',' << format_number(p.conductance_lh) << '\n';
    };
    row("original", r.original);
    row("low", r.low);
    row("high", r.high);
  }

  std::vector<std::string> warnings = r.warnings;
  for (const auto& [side, sub] : {std::pair{"low", &d.low}, std::pair{"high", &d.high}}) {
    const auto sub_names = subgraph_names(*sub, names);
    const std::string stem = side;
    if (auto w = write_subgraph(sub->graph, sub_names, dir / (stem + ".edges"),
                                GraphFileFormat::edge_list)) {
      warnings.push_back(*w);
    }
    write_subgraph(sub->graph, sub_names, dir / (stem + ".dot"), GraphFileFormat::dot);
    write_labels(sub->graph, sub_names, dir / (stem + ".labels"));
  }
  write_subgraph(*lg, names, dir / "original.dot", GraphFileFormat::dot);

  if (warnings.size() != r.warnings.size()) {
    j["warnings"] = warnings;
    write_json(dir / "summary.json", j);
  }

  out << network << ": q=" << lg->q() << " beta_mpl=" << format_number(r.estimation.beta_mpl)
      << " beta_used=" << format_number(r.estimation.beta_used) << " T="
      << format_number(d.threshold) << " |L|=" << d.low_nodes.size()
      << " |H|=" << d.high_nodes.size() << '\n';
  out << "  original M=" << format_number(r.original.modularity)
      << " C=" << format_number(r.original.coverage)
      << " P=" << format_number(r.original.performance) << '\n';
  out << "  L        M=" << format_number(r.low.modularity) << " C=" << format_number(r.low.coverage)
      << " P=" << format_number(r.low.performance) << '\n';
  out << "  H        M=" << format_number(r.high.modularity)
      << " C=" << format_number(r.high.coverage) << " P=" << format_number(r.high.performance)
      << '\n';
  out << "  conductance L/H=" << format_number(r.original.conductance_lh)
      << " max pairwise=" << format_number(r.original.conductance_pairwise_max) << '\n';
  return kSuccess;
}

void add_graph_options(CLI::App* app, GraphInput& in, bool required) {
  auto* opt = app->add_option("--graph", in.graph, "Edge-list file");
  if (required) opt->required()->check(CLI::ExistingFile);
  else opt->check(CLI::ExistingFile);
  app->add_option("--format", in.format, "Edge-list token separator")
      ->check(CLI::IsMember({"whitespace", "csv"}));
}

void add_estimation_options(CLI::App* app, EstimationConfig& c) {
  app->add_option("--beta0", c.beta0, "First secant starting point");
  app->add_option("--beta1", c.beta1, "Second secant starting point");
  app->add_option("--tol", c.tol, "Secant tolerance")->check(CLI::PositiveNumber);
  app->add_option("--max-iter", c.max_iter, "Secant iteration limit")->check(CLI::PositiveNumber);
  app->add_option("--beta-max", c.beta_max, "Search bound for beta")->check(CLI::PositiveNumber);
  app->add_flag("--allow-negative-beta", c.allow_negative,
                "Keep negative (anti-ferromagnetic) estimates instead of clamping to 0");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Potts-model information decomposition of labeled networks"};
  app.name("lohi");
  app.require_subcommand(1);

  KnnOptions knn;
  auto* knn_cmd = app.add_subcommand("knn", "Build a k-NN graph from a feature CSV");
  knn_cmd->add_option("--csv", knn.csv, "Feature CSV with a header row")
      ->required()
      ->check(CLI::ExistingFile);
  knn_cmd->add_option("--class-column", knn.class_column, "Name of the class column");
  knn_cmd->add_option("-k", knn.k, "Neighbours per node");
  knn_cmd->add_flag("--standardize,!--no-standardize", knn.standardize,
                    "z-score features before computing distances");
  knn_cmd->add_option("--metric", knn.metric, "Distance metric")
      ->check(CLI::IsMember({"euclidean", "manhattan"}));
  knn_cmd->add_option("--out", knn.out, "Output directory")->required();

  CommunitiesOptions comm;
  auto* comm_cmd = app.add_subcommand("communities", "Label nodes by greedy modularity (CNM)");
  add_graph_options(comm_cmd, comm.input, true);
  comm_cmd->add_option("--out", comm.out, "Output directory for labels.txt and communities.json");

  EstimateOptions est;
  auto* est_cmd = app.add_subcommand("estimate", "Maximum pseudo-likelihood estimate of beta");
  add_graph_options(est_cmd, est.input.graph, true);
  est_cmd->add_option("--labels", est.input.labels, "Label file")->required()->check(CLI::ExistingFile);
  est_cmd->add_option("--clamp", est.clamp, "Cap at the critical beta")
      ->check(CLI::IsMember({"none", "critical"}));
  add_estimation_options(est_cmd, est.estimation);
  est_cmd->add_option("--out", est.out, "Also write the JSON report here");

  MetricsOptions met;
  auto* met_cmd = app.add_subcommand("metrics", "Partition quality of a labeling");
  add_graph_options(met_cmd, met.input.graph, true);
  met_cmd->add_option("--labels", met.input.labels, "Label file")->required()->check(CLI::ExistingFile);
  met_cmd->add_option("--out", met.out, "Also write the JSON report here");

  SampleOptions smp;
  auto* smp_cmd = app.add_subcommand("sample", "Heat-bath Potts sample on a lattice");
  smp_cmd->add_option("--rows", smp.rows, "Lattice rows");
  smp_cmd->add_option("--cols", smp.cols, "Lattice columns");
  smp_cmd->add_flag("--open", smp.open, "Open boundaries instead of a torus");
  smp_cmd->add_option("--q", smp.sampler.q, "Number of states");
  smp_cmd->add_option("--beta", smp.sampler.beta, "Inverse temperature")->required();
  smp_cmd->add_option("--sweeps", smp.sampler.sweeps, "Full lattice passes");
  smp_cmd->add_option("--burn-in", smp.sampler.burn_in, "Sweeps treated as burn-in");
  smp_cmd->add_option("--seed", smp.sampler.seed, "Generator seed");
  smp_cmd->add_option("--out", smp.out, "Output directory")->required();

  DecomposeOptions dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Split a labeled network into L and H subgraphs");
  add_graph_options(dec_cmd, dec.graph, false);
  dec_cmd->add_option("--labels", dec.labels, "Label file")->check(CLI::ExistingFile);
  dec_cmd->add_flag("--cnm", dec.cnm, "Label nodes with CNM communities");
  dec_cmd->add_option("--csv", dec.csv, "Feature CSV (builds a k-NN graph)")->check(CLI::ExistingFile);
  dec_cmd->add_option("--class-column", dec.class_column, "Class column of --csv");
  dec_cmd->add_option("-k", dec.k, "Neighbours per node for --csv");
  dec_cmd->add_flag("--standardize,!--no-standardize", dec.standardize,
                    "z-score features of --csv");
  dec_cmd->add_option("--metric", dec.metric, "Distance metric for --csv")
      ->check(CLI::IsMember({"euclidean", "manhattan"}));
  dec_cmd->add_option("-p,--quantile", dec.quantile, "Information threshold quantile");
  dec_cmd->add_option("--clamp", dec.clamp,
                      "auto = critical for edge lists, none for --csv")
      ->check(CLI::IsMember({"auto", "none", "critical"}));
  add_estimation_options(dec_cmd, dec.estimation);
  dec_cmd->add_flag("--tensorial", dec.tensorial, "Use the tensorial Fisher expressions");
  dec_cmd->add_option("--regularizer", dec.regularizer, "Shape operator regularizer");
  dec_cmd->add_option("--name", dec.name, "Network name used in reports");
  dec_cmd->add_option("--out", dec.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*knn_cmd) return cmd_knn(knn, out);
    if (*comm_cmd) return cmd_communities(comm, out);
    if (*est_cmd) return cmd_estimate(est, out);
    if (*met_cmd) return cmd_metrics(met, out);
    if (*smp_cmd) return cmd_sample(smp, out);
    if (*dec_cmd) return cmd_decompose(dec, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace lohi::cli
