#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "arbor/corpus.hpp"
#include "arbor/enumeration.hpp"
#include "arbor/pipeline.hpp"

using namespace arbor;

namespace {

const std::string& corpus_text(int n) {
  static std::string text[10];
  if (text[n].empty()) {
    std::ifstream in(std::string(ARBOR_DATA_DIR) + "/connected_n" + std::to_string(n) + ".g6");
    text[n].assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return text[n];
}

CorpusOptions options(int jobs) {
  CorpusOptions o;
  o.metrics.assign(kAllMetrics.begin(), kAllMetrics.end());
  o.jobs = jobs;
  return o;
}

void BM_CorpusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::istringstream in(corpus_text(n));
    benchmark::DoNotOptimize(run_corpus_serial(in, options(1)));
  }
}

void BM_CorpusParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::istringstream in(corpus_text(n));
    benchmark::DoNotOptimize(run_corpus_parallel(in, options(jobs)));
  }
}

void BM_EnumerateComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  std::uint64_t trees = 0;
  for (auto _ : state) {
    trees = enumerate_spanning_trees(g, [](const SpanningTree&) { return VisitResult::kContinue; }).trees_visited;
  }
  state.counters["trees/s"] = benchmark::Counter(static_cast<double>(trees), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_FcbHistogramK8(benchmark::State& state) {
  const Graph g = complete_graph(8);
  for (auto _ : state) {
    std::vector<std::unique_ptr<Collector>> cs;
    cs.push_back(collector_histogram(MetricKey::kFcbWeight));
    benchmark::DoNotOptimize(run_pipeline(g, cs));
  }
}

}  // namespace

BENCHMARK(BM_CorpusSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusParallel)->Args({6, 2})->Args({6, 4})->Args({7, 2})->Args({7, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateComplete)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FcbHistogramK8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
