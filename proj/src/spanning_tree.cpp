#include "arbor/spanning_tree.hpp"

#include <algorithm>
#include <string>

#include "arbor/error.hpp"
#include "arbor/union_find.hpp"

namespace arbor {

SpanningTree::SpanningTree(const Graph& g)
    : graph_(&g),
      parent_(g.order(), kNoVertex),
      parent_edge_(g.order(), kNoEdge),
      depth_(g.order(), 0),
      order_(g.order(), 0) {
  edge_ids_.reserve(g.order() - 1);
}

bool SpanningTree::assign(EdgeSet edges) {
  edges_ = edges;
  edge_ids_.clear();
  edges.for_each([&](EdgeId e) { edge_ids_.push_back(e); });

  const int n = order();
  std::fill(parent_.begin(), parent_.end(), kNoVertex);
  std::fill(parent_edge_.begin(), parent_edge_.end(), kNoEdge);
  depth_[0] = 0;
  order_[0] = 0;
  int head = 0;
  int tail = 1;
  while (head < tail) {
    const Vertex v = order_[head++];
    for (const Incidence& inc : graph_->neighbors(v)) {
      if (!edges.contains(inc.edge) || inc.edge == parent_edge_[v]) continue;
      const Vertex w = inc.neighbor;
      if (w == 0 || parent_[w] != kNoVertex) continue;
      if (tail == n) return false;
      parent_[w] = v;
      parent_edge_[w] = inc.edge;
      depth_[w] = depth_[v] + 1;
      order_[tail++] = w;
    }
  }
  return tail == n;
}

SpanningTree tree_from_edges(const Graph& g, EdgeSet edges) {
  if (g.size() > kMaxBitsetEdges) {
    throw Error(ErrorCode::kTooManyEdges, "spanning trees need a graph with at most 64 edges");
  }
  if ((edges - g.all_edges()).size() != 0) {
    throw Error(ErrorCode::kUnknownEdge, "edge set names an edge the graph does not have");
  }
  const int n = g.order();
  if (edges.size() != n - 1) {
    throw Error(ErrorCode::kNotATree, "a spanning tree of " + std::to_string(n) + " vertices has " +
                                          std::to_string(n - 1) + " edges, got " +
                                          std::to_string(edges.size()));
  }
  UnionFind uf(n);
  edges.for_each([&](EdgeId e) {
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) {
      throw Error(ErrorCode::kNotATree, "edge " + std::to_string(e) + " closes a cycle", e);
    }
  });
  SpanningTree t(g);
  if (!t.assign(edges)) throw Error(ErrorCode::kNotATree, "edge set does not span the graph");
  return t;
}

SpanningTree tree_from_edges(const Graph& g, std::span<const EdgeId> edge_ids) {
  EdgeSet set;
  for (EdgeId e : edge_ids) {
    if (e < 0 || e >= g.size() || e >= kMaxBitsetEdges) {
      throw Error(ErrorCode::kUnknownEdge, "unknown edge id " + std::to_string(e), e);
    }
    set.insert(e);
  }
  if (set.size() != static_cast<int>(edge_ids.size())) {
    throw Error(ErrorCode::kNotATree, "edge id list contains repeats");
  }
  return tree_from_edges(g, set);
}

Path tree_path(const SpanningTree& t, Vertex u, Vertex v) {
  Path up;
  Path down;
  while (t.depth(u) > t.depth(v)) {
    up.push_back(t.parent_edge(u));
    u = t.parent(u);
  }
  while (t.depth(v) > t.depth(u)) {
    down.push_back(t.parent_edge(v));
    v = t.parent(v);
  }
  while (u != v) {
    up.push_back(t.parent_edge(u));
    u = t.parent(u);
    down.push_back(t.parent_edge(v));
    v = t.parent(v);
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

int tree_distance(const SpanningTree& t, Vertex u, Vertex v) {
  int d = 0;
  while (t.depth(u) > t.depth(v)) u = t.parent(u), ++d;
  while (t.depth(v) > t.depth(u)) v = t.parent(v), ++d;
  while (u != v) u = t.parent(u), v = t.parent(v), d += 2;
  return d;
}

}  // namespace arbor
