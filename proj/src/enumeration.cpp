#include "arbor/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "arbor/union_find.hpp"

namespace arbor {

GuardTripped::GuardTripped(TreeCount count)
    : Error(ErrorCode::kGuardTripped, "graph has " + count.get_str() + " spanning trees, above the guard threshold"),
      count_(std::move(count)) {}

EdgeSet greedy_root_tree(const Graph& g) {
  UnionFind uf(g.order());
  EdgeSet t;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) t.insert(e);
  }
  return t;
}

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, const TreeVisitor& visitor, std::optional<std::uint64_t> limit)
      : g_(g), visitor_(visitor), limit_(limit), root_(greedy_root_tree(g)), non_root_(g.all_edges() - root_) {
    levels_.reserve(g.order());
    for (int i = 0; i < g.order(); ++i) levels_.push_back(SpanningTree(g));
    children_.resize(g.order());
  }

  EnumerationSummary run() {
    const auto start = std::chrono::steady_clock::now();
    levels_[0].assign(root_);
    const bool completed = descend(0);
    summary_.aborted = !completed;
    summary_.elapsed = std::chrono::steady_clock::now() - start;
    return summary_;
  }

 private:
  struct Exchange {
    EdgeId leaving;
    EdgeId entering;
  };

  // Returns false when the enumeration must stop.
  bool descend(int level) {
    if (limit_ && summary_.trees_visited >= *limit_) return false;
    const SpanningTree& tree = levels_[level];
    ++summary_.trees_visited;
    if (visitor_(tree) == VisitResult::kStop) return false;

    const EdgeSet edges = tree.edges();
    const EdgeSet missing = root_ - edges;
    // Leaving edges must precede every root edge already missing from T.
    const EdgeSet leavable = missing.empty() ? root_ : (root_ & EdgeSet::first(missing.min()));

    std::vector<Exchange>& children = children_[level];
    children.clear();
    (non_root_ - edges).for_each([&](EdgeId entering) {
      const EdgeSet cycle = cycle_path(tree, entering);
      const EdgeSet later = EdgeSet::first(kMaxBitsetEdges) - EdgeSet::first(entering + 1);
      // `entering` must be the largest non-root edge on its cycle.
      if (!(cycle & non_root_ & later).empty()) return;
      (cycle & leavable).for_each([&](EdgeId leaving) { children.push_back({leaving, entering}); });
    });
    std::sort(children.begin(), children.end(), [](const Exchange& a, const Exchange& b) {
      return a.leaving != b.leaving ? a.leaving < b.leaving : a.entering < b.entering;
    });

    for (std::size_t i = 0; i < children.size(); ++i) {
      const Exchange x = children_[level][i];
      EdgeSet child = edges;
      child.erase(x.leaving);
      child.insert(x.entering);
      levels_[level + 1].assign(child);
      if (!descend(level + 1)) return false;
    }
    return true;
  }

  // Tree edges on the path between the endpoints of `chord`.
  EdgeSet cycle_path(const SpanningTree& t, EdgeId chord) const {
    Vertex u = g_.edge(chord).u;
    Vertex v = g_.edge(chord).v;
    EdgeSet path;
    while (t.depth(u) > t.depth(v)) path.insert(t.parent_edge(u)), u = t.parent(u);
    while (t.depth(v) > t.depth(u)) path.insert(t.parent_edge(v)), v = t.parent(v);
    while (u != v) {
      path.insert(t.parent_edge(u));
      path.insert(t.parent_edge(v));
      u = t.parent(u);
      v = t.parent(v);
    }
    return path;
  }

  const Graph& g_;
  const TreeVisitor& visitor_;
  std::optional<std::uint64_t> limit_;
  EdgeSet root_;
  EdgeSet non_root_;
  std::vector<SpanningTree> levels_;
  std::vector<std::vector<Exchange>> children_;
  EnumerationSummary summary_;
};

EnumerationSummary enumerate_spanning_trees(const Graph& g, const TreeVisitor& visitor,
                                            const EnumerationOptions& options) {
  if (g.size() > kMaxBitsetEdges) {
    throw Error(ErrorCode::kTooManyEdges, "enumeration supports at most 64 edges");
  }
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  if (options.guard_threshold) {
    GuardDecision decision = guard(g, *options.guard_threshold);
    if (!decision.proceed) throw GuardTripped(std::move(decision.count));
  }
  TreeEnumerator enumerator(g, visitor, options.limit);
  return enumerator.run();
}

std::vector<std::vector<EdgeId>> brute_force_spanning_trees(const Graph& g) {
  constexpr int kMaxEdges = 20;
  const int m = g.size();
  const int k = g.order() - 1;
  if (m > kMaxEdges) throw Error(ErrorCode::kTooLarge, "brute-force oracle is capped at 20 edges");
  std::vector<std::vector<EdgeId>> result;
  if (k > m) return result;

  auto spans = [&](std::uint32_t mask) {
    UnionFind uf(g.order());
    for (std::uint32_t b = mask; b; b &= b - 1) {
      const Edge& e = g.edge(std::countr_zero(b));
      if (!uf.unite(e.u, e.v)) return false;
    }
    return uf.components() == 1;
  };
  auto ids = [](std::uint32_t mask) {
    std::vector<EdgeId> out;
    for (std::uint32_t b = mask; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  };

  if (k == 0) {
    result.push_back({});
    return result;
  }
  // Gosper's hack: every mask with exactly k bits below 2^m.
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < end;) {
    if (spans(static_cast<std::uint32_t>(mask))) result.push_back(ids(static_cast<std::uint32_t>(mask)));
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace arbor
