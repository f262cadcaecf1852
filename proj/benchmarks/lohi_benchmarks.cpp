#include <benchmark/benchmark.h>

#include <filesystem>

#include "lohi/community.hpp"
#include "lohi/fisher.hpp"
#include "lohi/ingest.hpp"
#include "lohi/pipeline.hpp"
#include "lohi/potts.hpp"
#include "lohi/sampler.hpp"

namespace {

const std::filesystem::path kData = LOHI_DATA_DIR;

lohi::LabeledGraph sampled_torus(int side) {
  lohi::SamplerConfig cfg;
  cfg.beta = 0.3;
  cfg.q = 3;
  cfg.sweeps = 50;
  cfg.seed = 1;
  return lohi::gibbs_sample(lohi::grid_graph(side, side, true), cfg);
}

void BM_NodeInformation(benchmark::State& state, lohi::FisherPath path) {
  const auto g = sampled_torus(static_cast<int>(state.range(0)));
  lohi::FisherOptions options;
  options.path = path;
  for (auto _ : state) benchmark::DoNotOptimize(lohi::node_information(g, 0.5, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.node_count()));
}
BENCHMARK_CAPTURE(BM_NodeInformation, direct, lohi::FisherPath::direct)->Arg(30)->Arg(100);
BENCHMARK_CAPTURE(BM_NodeInformation, tensorial, lohi::FisherPath::tensorial)->Arg(30)->Arg(100);

void BM_EstimateBeta(benchmark::State& state) {
  const auto g = sampled_torus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lohi::estimate_beta(g));
}
BENCHMARK(BM_EstimateBeta)->Arg(30)->Arg(100);

void BM_GibbsSweeps(benchmark::State& state) {
  const auto torus = lohi::grid_graph(30, 30, true);
  lohi::SamplerConfig cfg;
  cfg.beta = 0.5;
  cfg.q = 3;
  cfg.sweeps = 100;
  for (auto _ : state) benchmark::DoNotOptimize(lohi::gibbs_sample(torus, cfg));
}
BENCHMARK(BM_GibbsSweeps);

void BM_CnmFootball(benchmark::State& state) {
  const auto g = lohi::read_edge_list(kData / "football.edges");
  for (auto _ : state) benchmark::DoNotOptimize(lohi::detect_communities_cnm(g.graph));
}
BENCHMARK(BM_CnmFootball);

void BM_KnnIris(benchmark::State& state) {
  const auto f = lohi::read_feature_csv(kData / "iris.csv", "class");
  for (auto _ : state) benchmark::DoNotOptimize(lohi::build_knn_graph(f, 15, true));
}
BENCHMARK(BM_KnnIris);

void BM_PipelineKarate(benchmark::State& state) {
  const auto g = lohi::read_edge_list(kData / "karate.edges");
  const auto lg = lohi::partition_to_labels(lohi::detect_communities_cnm(g.graph), g.graph);
  for (auto _ : state) benchmark::DoNotOptimize(lohi::run_lohi(lg));
}
BENCHMARK(BM_PipelineKarate);

}  // namespace
BENCHMARK_MAIN();
