#pragma once

#include <span>
#include <vector>

#include "arbor/edge_set.hpp"
#include "arbor/graph.hpp"

namespace arbor {

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Ordered edge ids; consecutive edges share an endpoint.
using Path = std::vector<EdgeId>;

/// One spanning tree of a graph, rooted at vertex 0.
///
/// Holds a pointer to its graph; the graph must outlive the tree. Inside an
/// enumeration callback the referenced object is reused by the engine, so
/// copy it to keep it.
class SpanningTree {
 public:
  const Graph& graph() const { return *graph_; }
  EdgeSet edges() const { return edges_; }
  std::span<const EdgeId> edge_ids() const { return edge_ids_; }
  bool contains(EdgeId e) const { return edges_.contains(e); }

  int order() const { return static_cast<int>(parent_.size()); }

  /// Parent of v; kNoVertex for the root.
  Vertex parent(Vertex v) const { return parent_[v]; }
  EdgeId parent_edge(Vertex v) const { return parent_edge_[v]; }
  int depth(Vertex v) const { return depth_[v]; }

  /// Vertices in breadth-first order from the root.
  std::span<const Vertex> bfs_order() const { return order_; }

  bool operator==(const SpanningTree& o) const { return graph_ == o.graph_ && edges_ == o.edges_; }

 private:
  friend SpanningTree tree_from_edges(const Graph&, EdgeSet);
  friend class TreeEnumerator;

  explicit SpanningTree(const Graph& g);

  /// Recomputes parent/depth arrays for `edges`. Returns false when the
  /// edges do not reach every vertex (the arrays are then unspecified).
  bool assign(EdgeSet edges);

  const Graph* graph_;
  EdgeSet edges_;
  std::vector<EdgeId> edge_ids_;
  std::vector<Vertex> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<int> depth_;
  std::vector<Vertex> order_;
};

/// Validates `edges` as a spanning tree of g. Throws Error(kNotATree) on a
/// wrong cardinality, a cycle, or missing coverage; Error(kTooManyEdges) if
/// g has more than 64 edges.
SpanningTree tree_from_edges(const Graph& g, EdgeSet edges);
SpanningTree tree_from_edges(const Graph& g, std::span<const EdgeId> edge_ids);
inline SpanningTree tree_from_edges(const Graph& g, std::initializer_list<EdgeId> ids) {
  return tree_from_edges(g, std::span<const EdgeId>(ids.begin(), ids.size()));
}

/// The unique tree path from u to v, in walking order. Empty iff u == v.
Path tree_path(const SpanningTree& t, Vertex u, Vertex v);

/// Tree distance from u to v.
int tree_distance(const SpanningTree& t, Vertex u, Vertex v);

}  // namespace arbor
