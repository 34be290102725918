#include "arbor/metrics.hpp"

#include <algorithm>
#include <string>

#include "arbor/error.hpp"

namespace arbor {

std::string_view metric_name(MetricKey key) {
  switch (key) {
    case MetricKey::kFcbWeight: return "fcb";
    case MetricKey::kDiameter: return "diameter";
    case MetricKey::kTotalPathLength: return "tpl";
    case MetricKey::kIntersectionNumber: return "mstci";
  }
  return "?";
}

std::optional<MetricKey> parse_metric(std::string_view name) {
  if (name == "fcb" || name == "fcb_weight") return MetricKey::kFcbWeight;
  if (name == "diameter") return MetricKey::kDiameter;
  if (name == "tpl" || name == "total_path_length") return MetricKey::kTotalPathLength;
  if (name == "mstci" || name == "intersection_number") return MetricKey::kIntersectionNumber;
  return std::nullopt;
}

FundamentalCycle fundamental_cycle(const Graph& g, const SpanningTree& t, EdgeId chord) {
  if (chord < 0 || chord >= g.size()) {
    throw Error(ErrorCode::kUnknownEdge, "unknown edge " + std::to_string(chord), chord);
  }
  if (t.contains(chord)) {
    throw Error(ErrorCode::kNotAChord, "edge " + std::to_string(chord) + " belongs to the tree", chord);
  }
  Vertex u = g.edge(chord).u;
  Vertex v = g.edge(chord).v;
  EdgeSet edges;
  edges.insert(chord);
  while (t.depth(u) > t.depth(v)) edges.insert(t.parent_edge(u)), u = t.parent(u);
  while (t.depth(v) > t.depth(u)) edges.insert(t.parent_edge(v)), v = t.parent(v);
  while (u != v) {
    edges.insert(t.parent_edge(u));
    edges.insert(t.parent_edge(v));
    u = t.parent(u);
    v = t.parent(v);
  }
  return {chord, edges, edges.size()};
}

std::vector<FundamentalCycle> fundamental_cycles(const Graph& g, const SpanningTree& t) {
  std::vector<FundamentalCycle> cycles;
  (g.all_edges() - t.edges()).for_each([&](EdgeId e) { cycles.push_back(fundamental_cycle(g, t, e)); });
  return cycles;
}

std::int64_t fcb_weight(const Graph& g, const SpanningTree& t) {
  std::int64_t total = 0;
  (g.all_edges() - t.edges()).for_each([&](EdgeId e) {
    total += tree_distance(t, g.edge(e).u, g.edge(e).v) + 1;
  });
  return total;
}

std::int64_t intersection_number(const Graph& g, const SpanningTree& t, IntersectionMode mode) {
  const EdgeSet chords = g.all_edges() - t.edges();
  if (chords.size() < 2) return 0;

  std::vector<std::uint64_t> masks;
  masks.reserve(chords.size());
  chords.for_each([&](EdgeId chord) {
    const EdgeSet cycle = fundamental_cycle(g, t, chord).edges;
    if (mode == IntersectionMode::kSharedEdge) {
      masks.push_back(cycle.bits());
    } else {
      std::uint64_t vertices = 0;
      cycle.for_each([&](EdgeId e) {
        vertices |= std::uint64_t{1} << g.edge(e).u;
        vertices |= std::uint64_t{1} << g.edge(e).v;
      });
      masks.push_back(vertices);
    }
  });
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j) pairs += (masks[i] & masks[j]) != 0;
  return pairs;
}

std::int64_t tree_diameter(const SpanningTree& t) {
  const int n = t.order();
  if (n == 1) return 0;
  const Graph& g = t.graph();
  // The deepest vertex from the root is one end of a longest path.
  Vertex far = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (t.depth(v) > t.depth(far)) far = v;
  }
  std::vector<int> dist(n, -1);
  std::vector<Vertex> queue(n);
  int head = 0, tail = 0;
  queue[tail++] = far;
  dist[far] = 0;
  int best = 0;
  while (head < tail) {
    const Vertex v = queue[head++];
    best = std::max(best, dist[v]);
    for (const Incidence& inc : g.neighbors(v)) {
      if (t.contains(inc.edge) && dist[inc.neighbor] < 0) {
        dist[inc.neighbor] = dist[v] + 1;
        queue[tail++] = inc.neighbor;
      }
    }
  }
  return best;
}

std::int64_t total_path_length(const SpanningTree& t) {
  const int n = t.order();
  std::vector<std::int64_t> subtree(n, 1);
  std::int64_t total = 0;
  const auto order = t.bfs_order();
  for (int i = n - 1; i > 0; --i) {
    const Vertex v = order[i];
    total += subtree[v] * (n - subtree[v]);
    subtree[t.parent(v)] += subtree[v];
  }
  return total;
}

std::int64_t TreeMetricReport::get(MetricKey key) const {
  switch (key) {
    case MetricKey::kFcbWeight: return fcb_weight;
    case MetricKey::kDiameter: return diameter;
    case MetricKey::kTotalPathLength: return total_path_length;
    case MetricKey::kIntersectionNumber: return intersection_number;
  }
  return 0;
}

TreeMetricReport tree_report(const Graph& g, const SpanningTree& t) {
  return {fcb_weight(g, t), tree_diameter(t), total_path_length(t), intersection_number(g, t)};
}

std::int64_t evaluate_metric(MetricKey key, const Graph& g, const SpanningTree& t) {
  switch (key) {
    case MetricKey::kFcbWeight: return fcb_weight(g, t);
    case MetricKey::kDiameter: return tree_diameter(t);
    case MetricKey::kTotalPathLength: return total_path_length(t);
    case MetricKey::kIntersectionNumber: return intersection_number(g, t);
  }
  return 0;
}

}  // namespace arbor
