#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arbor/error.hpp"
#include "arbor/graph.hpp"
#include "arbor/kirchhoff.hpp"
#include "arbor/spanning_tree.hpp"

namespace arbor {

enum class VisitResult { kContinue, kStop };

/// Called once per spanning tree. The tree reference is only valid for the
/// duration of the call.
using TreeVisitor = std::function<VisitResult(const SpanningTree&)>;

struct EnumerationOptions {
  /// Stop after this many trees.
  std::optional<std::uint64_t> limit;
  /// Refuse graphs with more trees than this; nullopt disables the guard.
  std::optional<TreeCount> guard_threshold = default_guard_threshold();
};

struct EnumerationSummary {
  std::uint64_t trees_visited = 0;
  std::chrono::nanoseconds elapsed{0};
  /// The visitor asked to stop or the limit was reached first.
  bool aborted = false;
};

/// Thrown when the guard refuses a graph.
class GuardTripped : public Error {
 public:
  explicit GuardTripped(TreeCount count);
  const TreeCount& count() const { return count_; }

 private:
  TreeCount count_;
};

/// Visits every spanning tree of g exactly once by reverse search over edge
/// exchanges.
///
/// The search starts at the greedy tree T0 (lowest edge ids first). Any other
/// tree T has the parent T + f - g, where f is the smallest edge of T0 missing
/// from T and g is the largest non-T0 edge on the cycle f closes. Children are
/// produced in ascending order of the leaving edge, then the entering edge,
/// and visited depth first in pre-order, so the visitation sequence depends
/// only on the edge order of g.
///
/// Throws Error(kDisconnected), Error(kTooManyEdges) for m > 64, and
/// GuardTripped when the tree count exceeds options.guard_threshold.
EnumerationSummary enumerate_spanning_trees(const Graph& g, const TreeVisitor& visitor,
                                            const EnumerationOptions& options = {});

/// The greedy spanning tree the search is rooted at. Requires a connected g.
EdgeSet greedy_root_tree(const Graph& g);

/// Every (n-1)-subset of edges that forms a spanning tree, as sorted id
/// lists in lexicographic order. Test oracle: throws Error(kTooLarge) for
/// m > 20.
std::vector<std::vector<EdgeId>> brute_force_spanning_trees(const Graph& g);

}  // namespace arbor
