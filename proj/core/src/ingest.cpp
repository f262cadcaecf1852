#include "lohi/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "lohi/error.hpp"

namespace lohi {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    auto field = trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (field.size() >= 2 && field.front() == '"' && field.back() == '"') {
      field = field.substr(1, field.size() - 2);
    }
    out.emplace_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_comment_or_blank(std::string_view line) {
  auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

constexpr std::string_view kNodeDirective = "#@node";

}  // namespace

std::optional<NodeId> NamedGraph::find(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<NodeId>(it - names.begin());
}

NamedGraph parse_edge_list(std::istream& in, EdgeListFormat format) {
  NamedGraph out;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, out.names.size());
    if (inserted) out.names.push_back(name);
    return it->second;
  };

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.starts_with(kNodeDirective)) {
      auto tokens = split_whitespace(t.substr(kNodeDirective.size()));
      if (tokens.size() != 1) {
        throw DataError("line " + std::to_string(line_no) + ": node declaration needs one name");
      }
      intern(tokens[0]);
      continue;
    }
    if (is_comment_or_blank(line)) continue;
    auto tokens = format == EdgeListFormat::csv ? split_csv(t) : split_whitespace(t);
    if (tokens.size() < 2 || tokens[0].empty() || tokens[1].empty()) {
      throw DataError("line " + std::to_string(line_no) + ": expected two node names, got \"" +
                      std::string(t) + "\"");
    }
    if (tokens.size() > 2) ++out.report.weighted_lines;
    const NodeId a = intern(tokens[0]);
    const NodeId b = intern(tokens[1]);
    edges.emplace_back(a, b);
  }
  if (edges.empty()) throw DataError("edge list contains no edges");

  EdgeCleanup cleanup;
  out.graph = Graph::from_edges(out.names.size(), edges, &cleanup);
  out.report.nodes_read = out.names.size();
  out.report.edges_read = edges.size();
  out.report.self_loops_dropped = cleanup.self_loops;
  out.report.duplicates_dropped = cleanup.duplicates;
  if (out.report.weighted_lines > 0) {
    out.report.warnings.push_back(std::to_string(out.report.weighted_lines) +
                                  " lines carry extra columns (edge weights); they were ignored");
  }
  return out;
}

NamedGraph read_edge_list(const std::filesystem::path& path, EdgeListFormat format) {
  auto in = open_input(path);
  try {
    return parse_edge_list(in, format);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

LabeledGraph parse_labels(std::istream& in, NamedGraph& g) {
  const std::size_t n = g.graph.node_count();
  std::vector<std::optional<std::string>> raw(n);
  std::unordered_map<std::string, NodeId> ids;
  for (NodeId i = 0; i < n; ++i) ids.emplace(g.names[i], i);

  enum class Mode { unknown, pairs, sequence } mode = Mode::unknown;
  std::size_t next = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto tokens = split_whitespace(line);
    const Mode here = tokens.size() == 1 ? Mode::sequence : Mode::pairs;
    if (tokens.size() > 2) {
      throw DataError("line " + std::to_string(line_no) + ": expected \"name label\" or \"label\"");
    }
    if (mode == Mode::unknown) mode = here;
    if (mode != here) {
      throw DataError("line " + std::to_string(line_no) +
                      ": mixes \"name label\" and one-label-per-line formats");
    }
    if (mode == Mode::sequence) {
      if (next >= n) {
        throw DataError("more labels than nodes (" + std::to_string(n) + ")");
      }
      raw[next++] = tokens[0];
    } else {
      auto it = ids.find(tokens[0]);
      if (it == ids.end()) {
        throw DataError("line " + std::to_string(line_no) + ": unknown node \"" + tokens[0] + "\"");
      }
      if (raw[it->second]) {
        throw DataError("line " + std::to_string(line_no) + ": node \"" + tokens[0] +
                        "\" labeled twice");
      }
      raw[it->second] = tokens[1];
    }
  }

  for (NodeId i = 0; i < n; ++i) {
    if (!raw[i]) {
      if (mode == Mode::sequence) {
        throw DataError("fewer labels (" + std::to_string(next) + ") than nodes (" +
                        std::to_string(n) + ")");
      }
      throw DataError("node \"" + g.names[i] + "\" has no label");
    }
  }

  std::unordered_map<std::string, Label> remap;
  std::vector<Label> labels(n);
  for (NodeId i = 0; i < n; ++i) {
    auto [it, inserted] = remap.try_emplace(*raw[i], static_cast<Label>(remap.size()) + 1);
    labels[i] = it->second;
  }
  const int q = static_cast<int>(remap.size());
  if (q < 2) {
    throw DataError("labeling has " + std::to_string(q) +
                    " distinct label; the Potts model needs q >= 2");
  }
  g.report.q = q;
  return LabeledGraph(g.graph, std::move(labels), q);
}

LabeledGraph read_labels(const std::filesystem::path& path, NamedGraph& g) {
  auto in = open_input(path);
  try {
    return parse_labels(in, g);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

FeatureMatrix parse_feature_csv(std::istream& in, const std::string& class_column) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header = split_csv(line);
      break;
    }
  }
  if (header.empty()) throw DataError("feature CSV has no header row");

  std::optional<std::size_t> class_index;
  if (!class_column.empty()) {
    auto it = std::find(header.begin(), header.end(), class_column);
    if (it == header.end()) {
      std::string available;
      for (const auto& h : header) available += (available.empty() ? "" : ", ") + h;
      throw ColumnNotFound("class column \"" + class_column + "\" not found; available columns: " +
                      available);
    }
    class_index = static_cast<std::size_t>(it - header.begin());
  }

  FeatureMatrix f;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != class_index) f.feature_names.push_back(header[c]);
  }
  f.cols = f.feature_names.size();
  if (f.cols == 0) throw DataError("feature CSV has no feature columns");

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c == class_index) {
        f.classes.push_back(fields[c]);
        continue;
      }
      auto v = parse_double(fields[c]);
      if (!v || !std::isfinite(*v)) {
        throw DataError("line " + std::to_string(line_no) + ": column \"" + header[c] +
                        "\" value \"" + fields[c] + "\" is not a finite number");
      }
      f.values.push_back(*v);
    }
    ++f.rows;
  }
  return f;
}

FeatureMatrix read_feature_csv(const std::filesystem::path& path, const std::string& class_column) {
  auto in = open_input(path);
  try {
    return parse_feature_csv(in, class_column);
  } catch (const ColumnNotFound& e) {
    throw ColumnNotFound(path.string() + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

Graph build_knn_edges(const FeatureMatrix& f, int k, bool standardize, DistanceMetric metric) {
  if (f.cols < 1) throw DataError("k-NN graph needs at least one feature column");
  if (k < 1 || static_cast<std::size_t>(k) >= f.rows) {
    throw DataError("k-NN graph needs 1 <= k < rows (k = " + std::to_string(k) +
                    ", rows = " + std::to_string(f.rows) + ")");
  }
  for (double v : f.values) {
    if (!std::isfinite(v)) throw DataError("feature matrix contains non-finite values");
  }

  std::vector<double> x = f.values;
  if (standardize) {
    for (std::size_t c = 0; c < f.cols; ++c) {
      double mean = 0.0;
      for (std::size_t r = 0; r < f.rows; ++r) mean += x[r * f.cols + c];
      mean /= static_cast<double>(f.rows);
      double var = 0.0;
      for (std::size_t r = 0; r < f.rows; ++r) {
        const double d = x[r * f.cols + c] - mean;
        var += d * d;
      }
      const double sd = std::sqrt(var / static_cast<double>(f.rows));
      for (std::size_t r = 0; r < f.rows; ++r) {
        x[r * f.cols + c] = sd > 0.0 ? (x[r * f.cols + c] - mean) / sd : 0.0;
      }
    }
  }

  const std::size_t n = f.rows;
  const auto kk = static_cast<std::size_t>(k);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n * kk);
  std::vector<std::pair<double, NodeId>> dist;
  dist.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    dist.clear();
    for (NodeId j = 0; j < n; ++j) {
      if (j == i) continue;
      double d = 0.0;
      for (std::size_t c = 0; c < f.cols; ++c) {
        const double diff = x[i * f.cols + c] - x[j * f.cols + c];
        d += metric == DistanceMetric::manhattan ? std::abs(diff) : diff * diff;
      }
      dist.emplace_back(d, j);
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(kk), dist.end());
    for (std::size_t t = 0; t < kk; ++t) edges.emplace_back(i, dist[t].second);
  }
  return Graph::from_edges(n, edges);
}

LabeledGraph build_knn_graph(const FeatureMatrix& f, int k, bool standardize,
                             DistanceMetric metric) {
  if (f.classes.size() != f.rows) {
    throw DataError("feature matrix has no class column to label the k-NN graph");
  }
  std::unordered_map<std::string, Label> remap;
  std::vector<Label> labels(f.rows);
  for (std::size_t r = 0; r < f.rows; ++r) {
    auto [it, inserted] = remap.try_emplace(f.classes[r], static_cast<Label>(remap.size()) + 1);
    labels[r] = it->second;
  }
  const int q = static_cast<int>(remap.size());
  if (q < 2) throw DataError("class column has a single value; the Potts model needs q >= 2");
  return LabeledGraph(build_knn_edges(f, k, standardize, metric), std::move(labels), q);
}

namespace {

std::string node_name(std::span<const std::string> names, NodeId i) {
  return i < names.size() ? names[i] : std::to_string(i);
}

}  // namespace

std::optional<std::string> write_subgraph(const LabeledGraph& g, std::span<const std::string> names,
                                          const std::filesystem::path& path,
                                          GraphFileFormat format) {
  auto out = open_output(path);
  const Graph& graph = g.graph();
  if (format == GraphFileFormat::edge_list) {
    out << "# " << graph.node_count() << " nodes, " << graph.edge_count() << " edges\n";
    for (NodeId i = 0; i < graph.node_count(); ++i) {
      if (graph.degree(i) == 0) out << kNodeDirective << ' ' << node_name(names, i) << '\n';
    }
    for (const auto& e : graph.edges()) {
      out << node_name(names, e.u) << ' ' << node_name(names, e.v) << '\n';
    }
  } else {
    out << "graph G {\n  node [style=filled, colorscheme=set312];\n";
    for (NodeId i = 0; i < graph.node_count(); ++i) {
      const Label l = g.label(i);
      out << "  \"" << node_name(names, i) << "\" [label=" << l
          << ", fillcolor=" << ((l - 1) % 12) + 1 << "];\n";
    }
    for (const auto& e : graph.edges()) {
      out << "  \"" << node_name(names, e.u) << "\" -- \"" << node_name(names, e.v) << "\";\n";
    }
    out << "}\n";
  }
  if (!out) throw DataError("write failed for " + path.string());
  if (graph.node_count() == 0) return "subgraph written to " + path.string() + " has no nodes";
  return std::nullopt;
}

void write_labels(const LabeledGraph& g, std::span<const std::string> names,
                  const std::filesystem::path& path) {
  auto out = open_output(path);
  for (NodeId i = 0; i < g.node_count(); ++i) out << node_name(names, i) << ' ' << g.label(i) << '\n';
  if (!out) throw DataError("write failed for " + path.string());
}

}  // namespace lohi
