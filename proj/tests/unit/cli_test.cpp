#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "lohi/community.hpp"
#include "lohi/ingest.hpp"
#include "lohi/pipeline.hpp"

namespace lohi {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kData = LOHI_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "lohi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("lohi_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, DecomposeKarateWritesAllOutputs) {
  const auto out = path("karate");
  const auto r = run({"decompose", "--graph", (kData / "karate.edges").string(), "--cnm", "--out",
                      out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* f : {"summary.json", "nodes.csv", "metrics.csv", "low.edges", "high.edges",
                        "low.dot", "high.dot", "low.labels", "high.labels", "original.dot"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const auto j = json::parse(slurp(out / "summary.json"));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["q"], 3);
  EXPECT_EQ(j["n_low"].get<int>() + j["n_high"].get<int>(), 34);
  EXPECT_EQ(j["low_nodes"].size(), j["n_low"].get<std::size_t>());
  EXPECT_EQ(j["high_nodes"].size(), j["n_high"].get<std::size_t>());
  EXPECT_TRUE(j["clamped"].is_boolean());
  EXPECT_LE(j["beta_used"].get<double>(), j["estimation"]["beta_critical"].get<double>() + 1e-6);
  EXPECT_NEAR(j["metrics"]["original"]["coverage"].get<double>(), 0.756, 0.001);
  EXPECT_TRUE(j["conductance_lh"].is_number());
  EXPECT_EQ(j["quantile"], 0.75);
  EXPECT_NE(r.out.find("|H|="), std::string::npos);

  // nodes.csv: header plus one row per node.
  std::istringstream nodes(slurp(out / "nodes.csv"));
  int lines = 0;
  for (std::string line; std::getline(nodes, line);) ++lines;
  EXPECT_EQ(lines, 35);
}

TEST_F(CliTest, DecomposeIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"decompose", "--graph", (kData / "karate.edges").string(),
                                      "--cnm", "--out", path("o").string()};
  const std::vector<std::string> files{"summary.json", "nodes.csv", "metrics.csv", "low.edges",
                                       "high.edges", "low.dot", "original.dot"};
  ASSERT_EQ(run(args).code, 0);
  std::vector<std::string> first;
  for (const auto& f : files) first.push_back(slurp(path("o") / f));
  fs::remove_all(path("o"));
  ASSERT_EQ(run(args).code, 0);
  for (std::size_t i = 0; i < files.size(); ++i) {
    EXPECT_EQ(first[i], slurp(path("o") / files[i])) << files[i];
  }
}

TEST_F(CliTest, DecomposeWithoutClamp) {
  const auto r = run({"decompose", "--graph", (kData / "karate.edges").string(), "--cnm",
                      "--clamp", "none", "--out", path("o").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(slurp(path("o") / "summary.json"));
  EXPECT_FALSE(j["clamped"].get<bool>());
  EXPECT_EQ(j["beta_mpl"], j["beta_used"]);
  EXPECT_EQ(j["config"]["clamp"], "none");
}

TEST_F(CliTest, DecomposeFromCsv) {
  const auto r = run({"decompose", "--csv", (kData / "iris.csv").string(), "-k", "15", "--out",
                      path("iris").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(slurp(path("iris") / "summary.json"));
  EXPECT_EQ(j["q"], 3);
  EXPECT_FALSE(j["clamped"].get<bool>());
}

TEST_F(CliTest, DecomposeUsageErrors) {
  EXPECT_EQ(run({"decompose", "--out", path("x").string()}).code, 1);
  EXPECT_EQ(run({"decompose", "--graph", (kData / "karate.edges").string(), "--out",
                 path("x").string()})
                .code,
            1);
  EXPECT_EQ(run({"decompose", "--graph", (kData / "karate.edges").string(), "--cnm", "-p", "1.5",
                 "--out", path("x").string()})
                .code,
            1);
}

TEST_F(CliTest, KnnWritesGraphAndLabels) {
  const auto r = run({"knn", "--csv", (kData / "iris.csv").string(), "-k", "15", "--out",
                      path("knn").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto g = read_edge_list(path("knn") / "graph.edges");
  EXPECT_EQ(g.graph.node_count(), 150u);
  const auto lg = read_labels(path("knn") / "labels.txt", g);
  EXPECT_EQ(lg.q(), 3);
  const auto j = json::parse(slurp(path("knn") / "ingest.json"));
  EXPECT_EQ(j["edges"].get<std::size_t>(), g.graph.edge_count());
}

TEST_F(CliTest, KnnRejectsTooLargeK) {
  EXPECT_EQ(run({"knn", "--csv", (kData / "iris.csv").string(), "-k", "150", "--out",
                 path("knn").string()})
                .code,
            1);
}

TEST_F(CliTest, MissingClassColumnIsUsageError) {
  const auto r = run({"knn", "--csv", (kData / "iris.csv").string(), "--class-column", "species",
                      "--out", path("knn").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("class"), std::string::npos) << r.err;
}

TEST_F(CliTest, SampleRejectsNegativeBeta) {
  EXPECT_EQ(run({"sample", "--beta", "-0.5", "--out", path("s").string()}).code, 1);
  EXPECT_EQ(run({"sample", "--beta", "0.5", "--rows", "1", "--out", path("s").string()}).code, 1);
}

TEST_F(CliTest, SampleSmallTorus) {
  const auto r = run({"sample", "--rows", "2", "--cols", "2", "--q", "2", "--beta", "0.4",
                      "--sweeps", "10", "--burn-in", "2", "--seed", "3", "--out",
                      path("s").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto g = read_edge_list(path("s") / "graph.edges");
  EXPECT_EQ(g.graph.node_count(), 4u);
  EXPECT_EQ(g.graph.edge_count(), 4u);
  EXPECT_TRUE(fs::exists(path("s") / "labels.txt"));
  EXPECT_TRUE(fs::exists(path("s") / "sample.json"));
}

TEST_F(CliTest, MetricsOnTwoTriangles) {
  const auto graph = write("g.edges", "a b\nb c\na c\nd e\ne f\nd f\n");
  const auto labels = write("g.labels", "a 1\nb 1\nc 1\nd 2\ne 2\nf 2\n");
  const auto r = run({"metrics", "--graph", graph.string(), "--labels", labels.string(), "--out",
                      path("m.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(slurp(path("m.json")));
  EXPECT_DOUBLE_EQ(j["metrics"]["modularity"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(j["metrics"]["coverage"].get<double>(), 1.0);
}

TEST_F(CliTest, EstimateWritesReport) {
  const auto graph = write("g.edges", "a b\nb c\nc d\nd a\n");
  const auto labels = write("g.labels", "a 1\nb 1\nc 2\nd 2\n");
  const auto r = run({"estimate", "--graph", graph.string(), "--labels", labels.string(),
                      "--out", path("e.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(slurp(path("e.json")));
  EXPECT_TRUE(j["estimation"].contains("beta_mpl"));
  EXPECT_TRUE(j["estimation"].contains("status"));
}

TEST_F(CliTest, MalformedGraphIsDataError) {
  const auto graph = write("bad.edges", "a b\nlonely\n");
  const auto r = run({"communities", "--graph", graph.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Pipeline, SplitsEveryNode) {
  auto g = read_edge_list(kData / "football.edges");
  const auto lg = partition_to_labels(detect_communities_cnm(g.graph), g.graph);
  const auto r = run_lohi(lg);
  EXPECT_EQ(r.info.size(), lg.node_count());
  EXPECT_EQ(r.decomposition.low_nodes.size() + r.decomposition.high_nodes.size(),
            lg.node_count());
  ASSERT_TRUE(r.original.conductance_lh.has_value());
  EXPECT_GE(*r.original.conductance_lh, 0.0);
  EXPECT_LE(*r.original.conductance_lh, 1.0);
}

}  // namespace
}  // namespace lohi
