#include <random>
#include <set>

#include "doctest.h"

#include "arbor/enumeration.hpp"
#include "arbor/formats.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

std::vector<std::vector<EdgeId>> collect(const Graph& g, const EnumerationOptions& options = {}) {
  std::vector<std::vector<EdgeId>> trees;
  enumerate_spanning_trees(
      g,
      [&](const SpanningTree& t) {
        trees.emplace_back(t.edge_ids().begin(), t.edge_ids().end());
        return VisitResult::kContinue;
      },
      options);
  return trees;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an arbor::Error");
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("fixture enumeration") {
  const auto trees = collect(oracle::fixture());
  const std::vector<std::vector<EdgeId>> expected{{0, 1, 2, 3}, {1, 2, 3, 4}, {0, 1, 2, 4}};
  CHECK(trees == expected);
}

TEST_CASE("small families") {
  const auto c4 = collect(cycle_graph(4));
  CHECK(c4.size() == 4);
  std::set<std::vector<EdgeId>> distinct(c4.begin(), c4.end());
  CHECK(distinct.size() == 4);

  const auto p3 = collect(path_graph(3));
  REQUIRE(p3.size() == 1);
  CHECK(p3.front() == std::vector<EdgeId>{0, 1});

  CHECK(collect(complete_graph(5)).size() == 125);
  CHECK(collect(Graph(1, {})).size() == 1);
}

TEST_CASE("complete-graph law") {
  for (int n = 3; n <= 7; ++n) CHECK(collect(complete_graph(n)).size() == oracle::cayley(n));
}

TEST_CASE("every visited tree is valid and its arrays are consistent") {
  const Graph g = complete_graph(6);
  enumerate_spanning_trees(g, [&](const SpanningTree& t) {
    CHECK(t.edge_ids().size() == 5u);
    for (Vertex v = 1; v < 6; ++v) {
      const Edge& e = g.edge(t.parent_edge(v));
      CHECK((e.u == v || e.v == v));
      CHECK(e.other(v) == t.parent(v));
      CHECK(t.depth(v) == t.depth(t.parent(v)) + 1);
      CHECK(t.contains(t.parent_edge(v)));
    }
    return VisitResult::kContinue;
  });
}

TEST_CASE("brute-force oracle") {
  const auto fixture = brute_force_spanning_trees(oracle::fixture());
  const std::vector<std::vector<EdgeId>> expected{{0, 1, 2, 3}, {0, 1, 2, 4}, {1, 2, 3, 4}};
  CHECK(fixture == expected);
  CHECK(brute_force_spanning_trees(complete_graph(4)).size() == 16);
  CHECK(brute_force_spanning_trees(Graph(2, {})).empty());
  CHECK(code_of([] { brute_force_spanning_trees(complete_graph(7)); }) == ErrorCode::kTooLarge);
}

TEST_CASE("enumeration, brute force and Kirchhoff agree on random graphs") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 1 + trial % 8, 14);
    auto trees = collect(g);
    const std::set<std::vector<EdgeId>> distinct(trees.begin(), trees.end());
    CHECK(distinct.size() == trees.size());
    std::sort(trees.begin(), trees.end());
    CHECK(trees == brute_force_spanning_trees(g));
    CHECK(count_spanning_trees(g) == trees.size());
  }
}

TEST_CASE("determinism") {
  const Graph g = parse_graph6("F?~vw");
  CHECK(collect(g) == collect(g));
}

TEST_CASE("limit and stop signal") {
  EnumerationOptions limited;
  limited.limit = 10;
  std::uint64_t calls = 0;
  auto summary = enumerate_spanning_trees(
      complete_graph(5), [&](const SpanningTree&) { return ++calls, VisitResult::kContinue; }, limited);
  CHECK(calls == 10);
  CHECK(summary.trees_visited == 10);
  CHECK(summary.aborted);

  limited.limit = 0;
  CHECK(collect(complete_graph(4), limited).empty());

  limited.limit = 3;
  summary = enumerate_spanning_trees(oracle::fixture(), [](const SpanningTree&) { return VisitResult::kContinue; },
                                     limited);
  CHECK(summary.trees_visited == 3);
  CHECK_FALSE(summary.aborted);

  calls = 0;
  summary = enumerate_spanning_trees(complete_graph(5), [&](const SpanningTree&) {
    return ++calls == 7 ? VisitResult::kStop : VisitResult::kContinue;
  });
  CHECK(calls == 7);
  CHECK(summary.aborted);

  summary = enumerate_spanning_trees(complete_graph(5), [](const SpanningTree&) { return VisitResult::kContinue; });
  CHECK(summary.trees_visited == 125);
  CHECK_FALSE(summary.aborted);
}

TEST_CASE("preconditions and the guard") {
  auto noop = [](const SpanningTree&) { return VisitResult::kContinue; };
  CHECK(code_of([&] { enumerate_spanning_trees(Graph(3, {{0, 1}}), noop); }) == ErrorCode::kDisconnected);

  EnumerationOptions strict;
  strict.guard_threshold = TreeCount(100);
  try {
    enumerate_spanning_trees(complete_graph(5), noop, strict);
    FAIL("guard should refuse K5 at threshold 100");
  } catch (const GuardTripped& e) {
    CHECK(e.count() == 125);
    CHECK(e.code() == ErrorCode::kGuardTripped);
  }
  strict.guard_threshold.reset();
  CHECK(enumerate_spanning_trees(complete_graph(5), noop, strict).trees_visited == 125);
}

TEST_CASE("greedy root tree") {
  CHECK(greedy_root_tree(oracle::fixture()) == EdgeSet::from_ids({0, 1, 2, 3}));
}
