#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lohi/graph.hpp"

namespace lohi {

enum class EdgeListFormat { whitespace, csv };

struct IngestionReport {
  std::size_t nodes_read = 0;
  std::size_t edges_read = 0;  // data lines
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t weighted_lines = 0;  // lines with a third token, weight ignored
  int q = 0;                       // distinct labels, once labels are read
  std::vector<std::string> warnings;
};

// Graph plus the original node names (index = dense id).
struct NamedGraph {
  Graph graph;
  std::vector<std::string> names;
  IngestionReport report;

  std::optional<NodeId> find(const std::string& name) const;
};

// Lines starting with '#' and blank lines are skipped, except "#@node NAME",
// which declares a (possibly isolated) node. Each data line has at least two
// tokens; node names get dense ids in first-appearance order.
// Throws DataError (with line numbers) on malformed lines or when no edges
// are present.
NamedGraph parse_edge_list(std::istream& in, EdgeListFormat format = EdgeListFormat::whitespace);
NamedGraph read_edge_list(const std::filesystem::path& path,
                          EdgeListFormat format = EdgeListFormat::whitespace);

// Label file: either "name label" per line or one label per line in node
// order. Distinct labels become 1..q in order of first appearance by node id.
// Throws DataError on missing/unknown/duplicate nodes, a count mismatch, or
// fewer than two distinct labels.
LabeledGraph parse_labels(std::istream& in, NamedGraph& g);
LabeledGraph read_labels(const std::filesystem::path& path, NamedGraph& g);

// Row-major n x d matrix with an optional class label per row.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<std::string> feature_names;
  std::vector<std::string> classes;  // empty when no class column

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

// CSV with a header row. `class_column` (if non-empty) names the label
// column; every other column must be numeric and finite. Throws DataError;
// a missing class column error lists the available columns.
FeatureMatrix parse_feature_csv(std::istream& in, const std::string& class_column);
FeatureMatrix read_feature_csv(const std::filesystem::path& path,
                               const std::string& class_column);

enum class DistanceMetric { euclidean, manhattan };

// Union-symmetrized k-NN graph (Euclidean unless told otherwise): {i, j} is an edge when j is among
// the k nearest rows to i or i among those of j. Distance ties go to the
// lower row index. With `standardize`, columns are z-scored first
// (population standard deviation; constant columns become 0).
// Throws DataError unless 1 <= k < rows and cols >= 1.
Graph build_knn_edges(const FeatureMatrix& f, int k, bool standardize,
                      DistanceMetric metric = DistanceMetric::euclidean);

// k-NN graph labeled by the class column (classes mapped to 1..q in order of
// first appearance). Throws DataError if the matrix has no class column.
LabeledGraph build_knn_graph(const FeatureMatrix& f, int k, bool standardize,
                             DistanceMetric metric = DistanceMetric::euclidean);

inline constexpr bool kDefaultStandardize = true;

enum class GraphFileFormat { edge_list, dot };

// Writes edges using `names` (index = node id; empty means numeric ids).
// Edge-list output declares isolated nodes with "#@node NAME" lines so that a
// round trip keeps the node count. DOT output colors nodes by label. Returns
// a warning string when the graph has no nodes. Throws DataError on I/O
// failure.
std::optional<std::string> write_subgraph(const LabeledGraph& g,
                                          std::span<const std::string> names,
                                          const std::filesystem::path& path,
                                          GraphFileFormat format);

// "name label" per node. Throws DataError on I/O failure.
void write_labels(const LabeledGraph& g, std::span<const std::string> names,
                  const std::filesystem::path& path);

}  // namespace lohi
