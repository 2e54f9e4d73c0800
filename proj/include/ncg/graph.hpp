#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ncg {

using Vertex = std::uint32_t;

/// Hop distance; std::nullopt means unreachable. Never use a sentinel integer
/// here: Sum costs add distances together.
using Distance = std::optional<std::uint32_t>;

/// Plain adjacency lists. Used for unowned auxiliary graphs (powers, the
/// dominating-set instances) and as the common input of the metric routines.
using Adjacency = std::vector<std::vector<Vertex>>;

struct OwnedEdge {
  Vertex a;  // a < b
  Vertex b;
  Vertex owner;  // a or b

  friend bool operator==(const OwnedEdge&, const OwnedEdge&) = default;
};

/// Simple undirected graph in which every edge remembers the endpoint that
/// bought it. The strategy of a player u is the set of neighbours v such
/// that u owns (u, v).
class OwnedGraph {
 public:
  OwnedGraph() = default;
  explicit OwnedGraph(std::size_t n);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  /// Adds the edge (owner, other) bought by `owner`. Throws
  /// PreconditionError on self-loops, out-of-range ids or parallel edges.
  void add_edge(Vertex owner, Vertex other);
  void remove_edge(Vertex u, Vertex v);

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<Vertex> owner(Vertex u, Vertex v) const;

  /// Sorted neighbour list of u.
  std::span<const Vertex> neighbors(Vertex u) const { return adj_.at(u); }
  std::size_t degree(Vertex u) const { return adj_.at(u).size(); }

  /// The strategy sigma_u, sorted ascending.
  std::span<const Vertex> strategy(Vertex u) const { return owned_.at(u); }
  std::size_t bought(Vertex u) const { return owned_.at(u).size(); }

  /// Players who bought an edge towards u, sorted ascending.
  std::vector<Vertex> in_neighbors(Vertex u) const;

  /// Replaces sigma_u by `endpoints`. Edges bought by others towards u stay.
  /// Throws PreconditionError if an endpoint is u, out of range, or already
  /// linked to u by an edge the other endpoint owns.
  void set_strategy(Vertex u, std::span<const Vertex> endpoints);

  /// All edges, sorted by (a, b) with a < b.
  std::vector<OwnedEdge> edges() const;

  const Adjacency& adjacency() const { return adj_; }

  friend bool operator==(const OwnedGraph&, const OwnedGraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  Adjacency adj_;
  std::vector<std::vector<Vertex>> owned_;
  std::size_t edge_count_ = 0;
};

std::vector<Distance> bfs_distances(const Adjacency& adj, Vertex source);
std::vector<Distance> bfs_distances(const OwnedGraph& g, Vertex source);

Distance eccentricity(const Adjacency& adj, Vertex u);
Distance eccentricity(const OwnedGraph& g, Vertex u);

/// Maximum eccentricity; nullopt if the graph is disconnected.
Distance diameter(const Adjacency& adj);
Distance diameter(const OwnedGraph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::uint32_t> girth(const Adjacency& adj);
std::optional<std::uint32_t> girth(const OwnedGraph& g);

bool is_connected(const Adjacency& adj);
bool is_connected(const OwnedGraph& g);

/// h-th power: (u, v) is an edge iff 0 < d(u, v) <= h.
Adjacency graph_power(const Adjacency& adj, std::uint32_t h);
Adjacency graph_power(const OwnedGraph& g, std::uint32_t h);

/// Induced subgraph on the radius-k ball around a player.
///
/// Local ids index `vertices`, which lists the original ids in increasing
/// order, so lexicographic order over local ids matches the original one.
struct View {
  Vertex center = 0;        // original id
  Vertex center_local = 0;  // index of the center in `vertices`
  std::uint32_t radius = 0;
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> dist;  // distance from the center, per local id
  OwnedGraph graph;                 // over local ids, ownership preserved

  std::size_t size() const { return vertices.size(); }
  std::optional<Vertex> local_of(Vertex original) const;
  /// Local ids at distance exactly `radius`.
  std::vector<Vertex> frontier() const;
};

View make_view(const OwnedGraph& g, Vertex u, std::uint32_t k);

}  // namespace ncg
