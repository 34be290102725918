// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arbor/cli.hpp"
#include "arbor/enumeration.hpp"
#include "arbor/formats.hpp"
#include "arbor/kirchhoff.hpp"
#include "arbor/metrics.hpp"
#include "arbor/pipeline.hpp"
#include "oracles.hpp"

using namespace arbor;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kExhaustiveBudgetSeconds = 60.0;
constexpr double kK8BudgetSeconds = 10.0;
constexpr int kMergeSplits = 100;
constexpr int kRandomGraphs = 50;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cli(std::vector<std::string> args, std::string* err_text = nullptr) {
  args.insert(args.begin(), "arbor");
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli_main(args, in, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, sep);) fields.push_back(f);
  return fields;
}

std::vector<Graph> corpus(int n) {
  std::vector<Graph> out;
  for (const std::string& line : oracle::read_lines(oracle::corpus_path(n))) out.push_back(parse_graph6(line));
  return out;
}

std::vector<SpanningTree> collect_trees(const Graph& g) {
  std::vector<SpanningTree> out;
  EnumerationOptions options;
  options.guard_threshold.reset();
  enumerate_spanning_trees(
      g,
      [&](const SpanningTree& t) {
        out.push_back(t);
        return VisitResult::kContinue;
      },
      options);
  return out;
}

std::int64_t oracle_min_fcb(const Graph& g) {
  const auto pairs = oracle::pairs_of(g);
  std::int64_t best = -1;
  for (const auto& t : oracle::all_spanning_subsets(g.order(), pairs)) {
    const std::int64_t w = oracle::tree_metrics(g.order(), pairs, t).fcb;
    if (best < 0 || w < best) best = w;
  }
  return best;
}

Outcome exhaustive_oracle() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t graphs = 0;
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto gs = corpus(n);
    o.require(gs.size() == expected[n - 1], "corpus n=" + std::to_string(n) + " has " + std::to_string(gs.size()));
    for (const Graph& g : gs) {
      ++graphs;
      std::vector<std::vector<EdgeId>> seen;
      const EnumerationSummary s = enumerate_spanning_trees(g, [&](const SpanningTree& t) {
        seen.emplace_back(t.edge_ids().begin(), t.edge_ids().end());
        return VisitResult::kContinue;
      });
      std::sort(seen.begin(), seen.end());
      const std::string tag = encode_graph6(g);
      o.require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), tag + ": duplicate tree");
      o.require(seen == brute_force_spanning_trees(g), tag + ": differs from brute force");
      o.require(seen == oracle::all_spanning_subsets(g.order(), oracle::pairs_of(g)), tag + ": differs from oracle");
      o.require(count_spanning_trees(g) == s.trees_visited, tag + ": Kirchhoff count differs");
    }
  }
  const double t = seconds_since(start);
  o.require(t < kExhaustiveBudgetSeconds, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(graphs) + " graphs, " + std::to_string(t) + " s";
  return o;
}

Outcome cayley_law() {
  Outcome o;
  const std::uint64_t expected[] = {3, 16, 125, 1296, 16807, 262144};
  for (int n = 3; n <= 8; ++n) {
    const EnumerationSummary s = enumerate_spanning_trees(
        complete_graph(n), [](const SpanningTree&) { return VisitResult::kContinue; });
    o.require(s.trees_visited == expected[n - 3] && s.trees_visited == oracle::cayley(n),
              "K" + std::to_string(n) + " enumerated " + std::to_string(s.trees_visited));
  }
  const TreeCount k9 = count_spanning_trees(complete_graph(9));
  o.require(k9 == 4782969, "K9 Kirchhoff count " + k9.get_str());
  if (o.pass) o.detail = "K3..K8 enumerated, K9 = " + k9.get_str();
  return o;
}

Outcome k8_performance() {
  Outcome o;
  std::vector<std::unique_ptr<Collector>> cs;
  cs.push_back(collector_histogram(MetricKey::kFcbWeight));
  const auto start = std::chrono::steady_clock::now();
  const PipelineResult r = run_pipeline(complete_graph(8), cs);
  const double t = seconds_since(start);
  const auto& hist = std::get<HistogramReport>(r.reports.front());
  o.require(r.summary.trees_visited == 262144, "visited " + std::to_string(r.summary.trees_visited));
  o.require(hist.total() == 262144, "histogram mass " + std::to_string(hist.total()));
  o.require(hist.counts.begin()->first == 63, "min fcb " + std::to_string(hist.counts.begin()->first));
  o.require(t < kK8BudgetSeconds, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(t) + " s";
  return o;
}

Outcome corpus_histogram(const fs::path& scratch) {
  Outcome o;
  const fs::path records = scratch / "n6_records.csv";
  const fs::path table = scratch / "n6_table.csv";
  o.require(cli({"corpus", oracle::corpus_path(6), "--metrics", "fcb", "--group-by", "edges", "--out",
                 records.string(), "--table", table.string()}) == kExitOk,
            "n=6 corpus run failed");

  std::set<std::string> groups;
  std::uint64_t mass = 0;
  std::istringstream table_in(slurp(table));
  std::string line;
  std::getline(table_in, line);
  while (std::getline(table_in, line)) {
    const auto f = split(line, ',');
    groups.insert(f[0]);
    mass += std::stoull(f[2]);
  }
  o.require(groups.size() == 11, std::to_string(groups.size()) + " edge groups");
  o.require(mass == 112, "mass " + std::to_string(mass));

  std::istringstream rec_in(slurp(records));
  std::getline(rec_in, line);
  std::size_t rows = 0;
  while (std::getline(rec_in, line)) {
    const auto f = split(line, ',');
    ++rows;
    const std::int64_t expected = oracle_min_fcb(parse_graph6(f[1]));
    o.require(f[5] == std::to_string(expected), f[1] + ": min_fcb " + f[5] + " vs oracle " + std::to_string(expected));
  }
  o.require(rows == 112, std::to_string(rows) + " record rows");

  const fs::path big = scratch / "n8_records.csv";
  std::string err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli({"corpus", oracle::corpus_path(8), "--big", "--group-by", "edges", "--out", big.string(),
                        "--table", (scratch / "n8_table.csv").string()},
                       &err);
  const double t = seconds_since(start);
  o.require(code == kExitOk, "n=8 corpus exit " + std::to_string(code) + ": " + err);
  o.require(err.find("refused") == std::string::npos, "n=8 guard trips: " + err);
  const std::string big_text = slurp(big);
  o.require(std::count(big_text.begin(), big_text.end(), '\n') == 11117 + 1, "n=8 record count");
  if (o.pass) o.detail = "11 groups, mass 112; n=8 corpus in " + std::to_string(t) + " s";
  return o;
}

Outcome fixture_suite() {
  Outcome o;
  const Graph g = oracle::fixture();
  o.require(count_spanning_trees(g) == 3, "Kirchhoff count");
  o.require(collect_trees(g).size() == 3, "enumerated count");
  const TreeMetricReport r = tree_report(g, tree_from_edges(g, {0, 1, 2, 4}));
  o.require(r.fcb_weight == 3, "fcb " + std::to_string(r.fcb_weight));
  o.require(r.diameter == 4, "diameter " + std::to_string(r.diameter));
  o.require(r.total_path_length == 20, "tpl " + std::to_string(r.total_path_length));
  o.require(r.intersection_number == 0, "mstci " + std::to_string(r.intersection_number));
  std::vector<std::unique_ptr<Collector>> cs;
  cs.push_back(collector_min_by(MetricKey::kDiameter));
  const auto min = std::get<MinByReport>(run_pipeline(g, cs).reports.front());
  o.require(min.value == 3, "min diameter");
  o.require(min.attained_by == 2 && min.witnesses.size() == 2, "min diameter witnesses");
  if (o.pass) o.detail = "3 trees; (3, 4, 20, 0); min diameter 3 x2";
  return o;
}

Outcome determinism_and_merge(const fs::path& scratch) {
  Outcome o;
  std::vector<std::string> outputs;
  for (const char* jobs : {"1", "4"}) {
    const fs::path rec = scratch / (std::string("det_records_") + jobs + ".csv");
    const fs::path tab = scratch / (std::string("det_table_") + jobs + ".csv");
    o.require(cli({"corpus", oracle::corpus_path(7), "--metrics", "fcb,diameter,tpl,mstci", "--group-by", "edges",
                   "--jobs", jobs, "--out", rec.string(), "--table", tab.string()}) == kExitOk,
              std::string("corpus --jobs ") + jobs + " failed");
    outputs.push_back(slurp(rec) + slurp(tab));
  }
  o.require(!outputs[0].empty() && outputs[0] == outputs[1], "--jobs 1 and --jobs 4 outputs differ");

  const Graph g = complete_graph(6);
  const auto trees = collect_trees(g);
  std::vector<std::unique_ptr<Collector>> protos;
  protos.push_back(collector_count());
  for (MetricKey k : kAllMetrics) {
    protos.push_back(collector_histogram(k));
    protos.push_back(collector_min_by(k, 5));
    protos.push_back(collector_top_k(k, 7, Direction::kMin));
    protos.push_back(collector_top_k(k, 7, Direction::kMax));
  }
  std::vector<Report> sequential;
  for (const auto& p : protos) {
    auto c = p->fresh();
    for (std::size_t i = 0; i < trees.size(); ++i) c->visit({g, trees[i], i});
    sequential.push_back(c->finalize());
  }

  std::mt19937 rng(20240611);
  for (int split = 0; split < kMergeSplits; ++split) {
    std::vector<std::size_t> cuts{0, trees.size()};
    const int pieces = 2 + static_cast<int>(rng() % 7);
    for (int i = 1; i < pieces; ++i) cuts.push_back(rng() % (trees.size() + 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::size_t> order(cuts.size() - 1);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t p = 0; p < protos.size(); ++p) {
      std::vector<std::unique_ptr<Collector>> parts;
      for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        auto c = protos[p]->fresh();
        for (std::size_t i = cuts[s]; i < cuts[s + 1]; ++i) c->visit({g, trees[i], i});
        parts.push_back(std::move(c));
      }
      auto acc = protos[p]->fresh();
      for (std::size_t s : order) acc->merge(*parts[s]);
      o.require(acc->finalize() == sequential[p],
                "split " + std::to_string(split) + " collector " + std::to_string(p) + " disagrees");
    }
  }
  if (o.pass) o.detail = "n=7 corpus byte-identical; " + std::to_string(kMergeSplits) + " random splits of K6";
  return o;
}

Outcome format_round_trips() {
  Outcome o;
  std::size_t lines = 0;
  std::mt19937 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (const std::string& line : oracle::read_lines(oracle::corpus_path(n))) {
      ++lines;
      const Graph g = parse_graph6(line);
      o.require(encode_graph6(g) == line, line + ": graph6 round trip");
      o.require(parse_incidence(write_incidence(g)) == g, line + ": incidence round trip");
      // Shuffled edge order must survive as well.
      auto pairs = oracle::pairs_of(g);
      std::shuffle(pairs.begin(), pairs.end(), rng);
      const Graph shuffled(g.order(), pairs);
      o.require(parse_incidence(write_incidence(shuffled)) == shuffled, line + ": shuffled incidence round trip");
    }
  }
  const Graph k5 = parse_graph6("D~{");
  o.require(k5.same_adjacency(complete_graph(5)), "D~{ is not K5");
  const Graph k1 = parse_graph6("@");
  o.require(k1.order() == 1 && k1.size() == 0, "@ is not K1");
  if (o.pass) o.detail = std::to_string(lines) + " graph6 lines";
  return o;
}

Outcome kirchhoff_internals() {
  Outcome o;
  std::mt19937 rng(1729);
  for (int i = 0; i < kRandomGraphs; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const TreeCount first = count_spanning_trees(g, 0);
    for (int v = 1; v < n; ++v) {
      o.require(count_spanning_trees(g, v) == first, "cofactor " + std::to_string(v) + " of graph " +
                                                         std::to_string(i) + " differs");
    }
    if (g.size() <= 16) {
      o.require(first == oracle::subset_tree_count(n, oracle::pairs_of(g)), "graph " + std::to_string(i) +
                                                                                  ": subset oracle differs");
    }
  }
  int pairs_checked = 0;
  while (pairs_checked < kRandomGraphs) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_connected_graph(rng, n, 14);
    const auto pairs = oracle::pairs_of(g);
    const auto br = oracle::bridges_by_removal(n, pairs);
    std::vector<int> candidates;
    for (int e = 0; e < g.size(); ++e)
      if (std::find(br.begin(), br.end(), e) == br.end()) candidates.push_back(e);
    if (candidates.empty()) continue;
    const int e = candidates[rng() % candidates.size()];
    const auto [cn, contracted] = oracle::contract(n, pairs, e);
    const std::uint64_t expected =
        oracle::subset_tree_count(n, oracle::remove_edge(pairs, e)) + oracle::subset_tree_count(cn, contracted);
    o.require(count_spanning_trees(g) == expected, "deletion-contraction on " + encode_graph6(g) + " edge " +
                                                       std::to_string(e));
    ++pairs_checked;
  }
  if (o.pass) o.detail = std::to_string(kRandomGraphs) + " graphs, " + std::to_string(pairs_checked) + " pairs";
  return o;
}

}  // namespace

int main() {
  const fs::path scratch = fs::temp_directory_path() / "arbor_acceptance";
  fs::remove_all(scratch);
  fs::create_directories(scratch);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 exhaustive oracle equivalence, n <= 6", exhaustive_oracle},
      {"2 Cayley law K3..K8, Kirchhoff K9", cayley_law},
      {"3 K8 with fcb histogram under 10 s", k8_performance},
      {"4 corpus min fcb by edge count, n = 6 and n = 8", [&] { return corpus_histogram(scratch); }},
      {"5 fixture suite", fixture_suite},
      {"6 determinism and merge law", [&] { return determinism_and_merge(scratch); }},
      {"7 format round trips", format_round_trips},
      {"8 Kirchhoff internals", kirchhoff_internals},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail << ")" << std::endl;
  }
  fs::remove_all(scratch);
  return failed;
}
