#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

/// C_n where vertex i buys the edge (i, i+1 mod n). Requires n >= 3.
OwnedGraph build_cycle(std::size_t n);

/// The Heawood graph (14 vertices, 3-regular, girth 6). Vertex i buys the
/// cycle edge (i, i+1 mod 14); even vertices also buy the chord (i, i+5).
OwnedGraph heawood();

/// Parameters of the stretched d-dimensional torus.
struct TorusParams {
  std::uint32_t d = 2;
  std::uint32_t ell = 2;             // path length between intersection vertices
  std::vector<std::uint32_t> delta;  // side lengths, one per dimension

  /// Throws ParamError unless d >= 2, ell >= 2, delta.size() == d and every
  /// side is at least 2.
  void validate() const;
  std::size_t intersection_count() const;  // 2 * prod delta_i
  std::size_t vertex_count() const;        // N * (2^(d-1) (ell-1) + 1)
};

using Coord = std::vector<std::int64_t>;

/// A built torus together with the coordinate labels of its vertices.
struct TorusGraph {
  TorusParams params;
  bool open = false;
  OwnedGraph graph;
  std::vector<Coord> labels;       // per vertex id
  std::vector<bool> intersection;  // per vertex id
  std::map<Coord, Vertex> index;

  /// Coordinate period per dimension (2 * delta_i * ell); closed torus only.
  std::int64_t period(std::size_t dim) const;
  /// Reduces coordinates into [0, period) for the closed torus; identity for
  /// the open one.
  Coord normalize(Coord c) const;
  std::optional<Vertex> find(const Coord& c) const;
  /// Lower bound on d(x, y) from the coordinates alone:
  /// max_i min(|x_i - y_i|, period_i - |x_i - y_i|) (closed) or
  /// max_i |x_i - y_i| (open).
  std::int64_t coordinate_bound(Vertex x, Vertex y) const;
};

/// Closed (toroidal) construction. Intersection vertices are the tuples
/// (ell a_1, ..., ell a_d) with all a_i of equal parity, 0 <= a_i < 2 delta_i.
/// Each is joined to the 2^d vertices (x_1 +- ell, ..., x_d +- ell) by a path
/// of length ell. Along a path oriented from its lexicographically smaller
/// endpoint, interior vertex i buys the edge to vertex i-1 and the last
/// interior vertex also buys the edge to the far endpoint. Intersection
/// vertices buy nothing.
TorusGraph build_torus(const TorusParams& p);

/// Non-modular version: 1 <= a_i <= delta_i, and intersection vertices are
/// joined only when every coordinate differs by exactly ell.
TorusGraph build_open_torus(const TorusParams& p);

/// The 2^d vertices (x_1 +- h, ..., x_d +- h) around an intersection vertex
/// of a closed torus, as sorted vertex ids.
std::vector<Vertex> f_set(const TorusGraph& torus, Vertex v, std::uint32_t h);

/// ell = ceil(alpha), d = ceil(log2(k / ell + 2)), delta_1..delta_{d-1} =
/// ceil(k / ell) + 1. delta_d defaults to delta_1 and must not be smaller.
/// Throws RangeError unless 1 < alpha <= k.
TorusParams torus_params_for(double alpha, std::uint32_t k,
                             std::optional<std::uint32_t> delta_d = std::nullopt);

/// Sum-variant lower-bound parameters: d = 2, ell = 2,
/// delta_1 = ceil(k / 2) + 1, delta_2 = `delta_2` (>= delta_1).
TorusParams sum_torus_params(std::uint32_t k, std::uint32_t delta_2);

}  // namespace ncg
