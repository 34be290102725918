#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "arbor/graph.hpp"
#include "arbor/spanning_tree.hpp"

namespace arbor {

/// Per-tree metrics; all integral.
enum class MetricKey { kFcbWeight, kDiameter, kTotalPathLength, kIntersectionNumber };

inline constexpr std::array<MetricKey, 4> kAllMetrics = {
    MetricKey::kFcbWeight, MetricKey::kDiameter, MetricKey::kTotalPathLength,
    MetricKey::kIntersectionNumber};

/// Short names used on the command line and in CSV headers: fcb, diameter,
/// tpl, mstci.
std::string_view metric_name(MetricKey key);

/// Accepts the short names and the long ones (fcb_weight, total_path_length,
/// intersection_number).
std::optional<MetricKey> parse_metric(std::string_view name);

struct FundamentalCycle {
  EdgeId chord;
  EdgeSet edges;
  int length;
};

/// The chord plus the tree path between its endpoints. Throws
/// Error(kNotAChord) if the edge belongs to the tree.
FundamentalCycle fundamental_cycle(const Graph& g, const SpanningTree& t, EdgeId chord);

/// One cycle per chord, in ascending chord order.
std::vector<FundamentalCycle> fundamental_cycles(const Graph& g, const SpanningTree& t);

/// Total length of the tree's fundamental cycles.
std::int64_t fcb_weight(const Graph& g, const SpanningTree& t);

enum class IntersectionMode {
  kSharedEdge,    // cycles intersect when they have an edge in common
  kSharedVertex,  // ... or merely a vertex
};

/// Unordered pairs of fundamental cycles that intersect.
std::int64_t intersection_number(const Graph& g, const SpanningTree& t,
                                 IntersectionMode mode = IntersectionMode::kSharedEdge);

/// Longest tree path, in edges.
std::int64_t tree_diameter(const SpanningTree& t);

/// Sum of tree distances over unordered vertex pairs (Wiener index).
std::int64_t total_path_length(const SpanningTree& t);

struct TreeMetricReport {
  std::int64_t fcb_weight = 0;
  std::int64_t diameter = 0;
  std::int64_t total_path_length = 0;
  std::int64_t intersection_number = 0;

  std::int64_t get(MetricKey key) const;
  bool operator==(const TreeMetricReport&) const = default;
};

TreeMetricReport tree_report(const Graph& g, const SpanningTree& t);

std::int64_t evaluate_metric(MetricKey key, const Graph& g, const SpanningTree& t);

struct MinFcb {
  std::int64_t value;
  std::uint64_t attained_by;
  std::vector<std::vector<EdgeId>> witnesses;
};

/// Minimum fcb_weight over all spanning trees, found by full enumeration.
/// Throws what enumerate_spanning_trees throws.
MinFcb min_fcb(const Graph& g, std::size_t witness_cap = 16);

}  // namespace arbor
