#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arbor/edge_set.hpp"

namespace arbor {

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool same_pair(const Edge& o) const { return (u == o.u && v == o.v) || (u == o.v && v == o.u); }
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edge ids are the positions in the construction sequence. Self-loops and
/// repeated unordered pairs are rejected.
class Graph {
 public:
  /// Throws Error(kInvalidVertexCount | kVertexOutOfRange | kSelfLoop |
  /// kDuplicateEdge); the error index is the offending edge position.
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  /// All edge ids as a bit set. Requires size() <= 64.
  EdgeSet all_edges() const { return EdgeSet::first(size()); }

  /// Same vertex count and same set of unordered pairs, ignoring edge order.
  bool same_adjacency(const Graph& other) const;

  /// Same vertex count and, for every edge id, the same unordered pair.
  bool operator==(const Graph& other) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Incidence> adjacency_;
};

/// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t operator()(int i, int j) const {
    return data[static_cast<std::size_t>(i) * cols + j];
  }
  bool operator==(const IntMatrix&) const = default;
};

bool is_connected(const Graph& g);

/// Edge ids whose removal increases the number of components, ascending.
std::vector<EdgeId> bridges(const Graph& g);

IntMatrix laplacian(const Graph& g);

/// n x m; column j has 1s at the endpoints of edge j.
IntMatrix incidence_matrix(const Graph& g);

/// Complete graph K_n with edges in lexicographic order.
Graph complete_graph(int n);

/// Cycle 0-1-...-(n-1)-0.
Graph cycle_graph(int n);

/// Path 0-1-...-(n-1).
Graph path_graph(int n);

/// Star centred at 0.
Graph star_graph(int n);

}  // namespace arbor
