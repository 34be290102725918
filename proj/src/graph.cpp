#include "arbor/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "arbor/error.hpp"

namespace arbor {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kInvalidVertexCount, "graph needs at least one vertex");
  std::unordered_set<std::uint64_t> seen;
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    const auto idx = static_cast<std::int64_t>(i);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + std::to_string(i) + " has an endpoint outside 0.." + std::to_string(n - 1),
                  idx);
    }
    if (u == v) throw Error(ErrorCode::kSelfLoop, "edge " + std::to_string(i) + " is a self-loop", idx);
    const auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint32_t>(std::max(u, v));
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kDuplicateEdge, "edge " + std::to_string(i) + " repeats an earlier pair", idx);
    }
    edges_.push_back({u, v});
  }

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < size(); ++e) {
    adjacency_[fill[edges_[e].u]++] = {edges_[e].v, e};
    adjacency_[fill[edges_[e].v]++] = {edges_[e].u, e};
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  for (const Incidence& inc : neighbors(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ &&
         std::equal(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                    [](const Edge& a, const Edge& b) { return a.same_pair(b); });
}

bool Graph::same_adjacency(const Graph& other) const {
  if (n_ != other.n_ || size() != other.size()) return false;
  auto normalized = [](const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges()) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  };
  return normalized(*this) == normalized(other);
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbors(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

std::vector<EdgeId> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> result;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Incidence inc = nbrs[f.next++];
        if (inc.edge == f.via) continue;
        if (disc[inc.neighbor] == -1) {
          disc[inc.neighbor] = low[inc.neighbor] = timer++;
          stack.push_back({inc.neighbor, inc.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[inc.neighbor]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Vertex parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) result.push_back(done.via);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

IntMatrix laplacian(const Graph& g) {
  IntMatrix L(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    ++L(e.u, e.u);
    ++L(e.v, e.v);
    L(e.u, e.v) = -1;
    L(e.v, e.u) = -1;
  }
  return L;
}

IntMatrix incidence_matrix(const Graph& g) {
  IntMatrix B(g.order(), g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    B(g.edge(e).u, e) = 1;
    B(g.edge(e).v, e) = 1;
  }
  return B;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph star_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

}  // namespace arbor
