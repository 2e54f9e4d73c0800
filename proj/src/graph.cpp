#include "ncg/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "ncg/errors.hpp"

namespace ncg {

namespace {

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void sorted_insert(std::vector<Vertex>& v, Vertex x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void sorted_erase(std::vector<Vertex>& v, Vertex x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

// Raw BFS layer numbers; kUnseen never leaves this file.
void bfs_raw(const Adjacency& adj, Vertex source, std::vector<std::uint32_t>& dist,
             std::vector<Vertex>& queue) {
  dist.assign(adj.size(), kUnseen);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : adj[x]) {
      if (dist[y] == kUnseen) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

OwnedGraph::OwnedGraph(std::size_t n) : adj_(n), owned_(n) {}

void OwnedGraph::check_vertex(Vertex v) const {
  if (v >= adj_.size()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range (n=" +
                            std::to_string(adj_.size()) + ")");
  }
}

void OwnedGraph::add_edge(Vertex owner, Vertex other) {
  check_vertex(owner);
  check_vertex(other);
  if (owner == other) {
    throw PreconditionError("self-loop at vertex " + std::to_string(owner));
  }
  if (has_edge(owner, other)) {
    throw PreconditionError("parallel edge (" + std::to_string(owner) + ", " +
                            std::to_string(other) + ")");
  }
  sorted_insert(adj_[owner], other);
  sorted_insert(adj_[other], owner);
  sorted_insert(owned_[owner], other);
  ++edge_count_;
}

void OwnedGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) {
    throw PreconditionError("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  sorted_erase(adj_[u], v);
  sorted_erase(adj_[v], u);
  sorted_erase(owned_[u], v);
  sorted_erase(owned_[v], u);
  --edge_count_;
}

bool OwnedGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return sorted_contains(adj_[u], v);
}

std::optional<Vertex> OwnedGraph::owner(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) return std::nullopt;
  return sorted_contains(owned_[u], v) ? u : v;
}

std::vector<Vertex> OwnedGraph::in_neighbors(Vertex u) const {
  check_vertex(u);
  std::vector<Vertex> result;
  for (Vertex v : adj_[u]) {
    if (!sorted_contains(owned_[u], v)) result.push_back(v);
  }
  return result;
}

void OwnedGraph::set_strategy(Vertex u, std::span<const Vertex> endpoints) {
  check_vertex(u);
  std::vector<Vertex> next(endpoints.begin(), endpoints.end());
  std::sort(next.begin(), next.end());
  if (std::adjacent_find(next.begin(), next.end()) != next.end()) {
    throw PreconditionError("strategy lists an endpoint twice");
  }
  for (Vertex v : next) {
    check_vertex(v);
    if (v == u) throw PreconditionError("strategy of a player cannot contain herself");
    if (has_edge(u, v) && !sorted_contains(owned_[u], v)) {
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") is already bought by " + std::to_string(v));
    }
  }
  const std::vector<Vertex> previous = owned_[u];
  for (Vertex v : previous) remove_edge(u, v);
  for (Vertex v : next) add_edge(u, v);
}

std::vector<OwnedEdge> OwnedGraph::edges() const {
  std::vector<OwnedEdge> result;
  result.reserve(edge_count_);
  for (Vertex a = 0; a < adj_.size(); ++a) {
    for (Vertex b : adj_[a]) {
      if (a < b) result.push_back({a, b, sorted_contains(owned_[a], b) ? a : b});
    }
  }
  return result;
}

std::vector<Distance> bfs_distances(const Adjacency& adj, Vertex source) {
  if (source >= adj.size()) throw PreconditionError("BFS source out of range");
  std::vector<std::uint32_t> raw;
  std::vector<Vertex> queue;
  bfs_raw(adj, source, raw, queue);
  std::vector<Distance> result(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (raw[v] != kUnseen) result[v] = raw[v];
  }
  return result;
}

std::vector<Distance> bfs_distances(const OwnedGraph& g, Vertex source) {
  return bfs_distances(g.adjacency(), source);
}

Distance eccentricity(const Adjacency& adj, Vertex u) {
  if (u >= adj.size()) throw PreconditionError("vertex out of range");
  std::vector<std::uint32_t> raw;
  std::vector<Vertex> queue;
  bfs_raw(adj, u, raw, queue);
  if (queue.size() != adj.size()) return std::nullopt;
  return raw[queue.back()];
}

Distance eccentricity(const OwnedGraph& g, Vertex u) { return eccentricity(g.adjacency(), u); }

Distance diameter(const Adjacency& adj) {
  std::uint32_t best = 0;
  std::vector<std::uint32_t> raw;
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < adj.size(); ++u) {
    bfs_raw(adj, u, raw, queue);
    if (queue.size() != adj.size()) return std::nullopt;
    best = std::max(best, raw[queue.back()]);
  }
  return best;
}

Distance diameter(const OwnedGraph& g) { return diameter(g.adjacency()); }

std::optional<std::uint32_t> girth(const Adjacency& adj) {
  // BFS from every vertex; a non-tree edge (x, y) closes a closed walk of
  // length d(x) + d(y) + 1 that contains a cycle at most that long, and for a
  // root on a shortest cycle the bound is attained.
  std::uint32_t best = kUnseen;
  std::vector<std::uint32_t> dist(adj.size());
  std::vector<Vertex> parent(adj.size());
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < adj.size(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (2 * dist[x] >= best) break;
      for (Vertex y : adj[x]) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

std::optional<std::uint32_t> girth(const OwnedGraph& g) { return girth(g.adjacency()); }

bool is_connected(const Adjacency& adj) {
  if (adj.empty()) return true;
  std::vector<std::uint32_t> raw;
  std::vector<Vertex> queue;
  bfs_raw(adj, 0, raw, queue);
  return queue.size() == adj.size();
}

bool is_connected(const OwnedGraph& g) { return is_connected(g.adjacency()); }

Adjacency graph_power(const Adjacency& adj, std::uint32_t h) {
  Adjacency result(adj.size());
  if (h == 0) return result;
  std::vector<std::uint32_t> raw;
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < adj.size(); ++u) {
    bfs_raw(adj, u, raw, queue);
    for (Vertex v : queue) {
      if (v != u && raw[v] <= h) result[u].push_back(v);
    }
    std::sort(result[u].begin(), result[u].end());
  }
  return result;
}

Adjacency graph_power(const OwnedGraph& g, std::uint32_t h) {
  return graph_power(g.adjacency(), h);
}

std::optional<Vertex> View::local_of(Vertex original) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), original);
  if (it == vertices.end() || *it != original) return std::nullopt;
  return static_cast<Vertex>(it - vertices.begin());
}

std::vector<Vertex> View::frontier() const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < dist.size(); ++v) {
    if (dist[v] == radius) result.push_back(v);
  }
  return result;
}

View make_view(const OwnedGraph& g, Vertex u, std::uint32_t k) {
  if (k < 1) throw PreconditionError("view radius must be at least 1");
  if (u >= g.order()) throw PreconditionError("view center out of range");

  // Truncated BFS; the k-ball never needs more than k layers.
  std::vector<std::uint32_t> dist_full(g.order(), kUnseen);
  std::vector<Vertex> ball{u};
  dist_full[u] = 0;
  for (std::size_t head = 0; head < ball.size(); ++head) {
    const Vertex x = ball[head];
    if (dist_full[x] == k) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist_full[y] == kUnseen) {
        dist_full[y] = dist_full[x] + 1;
        ball.push_back(y);
      }
    }
  }

  View view;
  view.center = u;
  view.radius = k;
  view.vertices = ball;
  std::sort(view.vertices.begin(), view.vertices.end());
  view.center_local = *view.local_of(u);
  view.dist.reserve(view.vertices.size());
  for (Vertex v : view.vertices) view.dist.push_back(dist_full[v]);

  view.graph = OwnedGraph(view.vertices.size());
  for (Vertex a_local = 0; a_local < view.vertices.size(); ++a_local) {
    const Vertex a = view.vertices[a_local];
    for (Vertex b : g.strategy(a)) {
      if (dist_full[b] == kUnseen) continue;
      view.graph.add_edge(a_local, *view.local_of(b));
    }
  }
  return view;
}

}  // namespace ncg
