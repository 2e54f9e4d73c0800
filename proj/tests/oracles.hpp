#pragma once

// Independent reference implementations used only by the tests. Nothing in
// here calls the solvers under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "ncg/game.hpp"
#include "ncg/graph.hpp"

namespace ncg::oracle {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::uint32_t>> floyd(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (Vertex j : adj[i]) d[i][j] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

/// Shortest cycle by enumerating simple cycles with DFS (tiny graphs only).
inline std::optional<std::uint32_t> girth_by_cycles(const Adjacency& adj) {
  std::uint32_t best = kInf;
  const std::size_t n = adj.size();
  std::vector<bool> on_path(n, false);
  // Cycles rooted at their smallest vertex.
  std::function<void(Vertex, Vertex, std::uint32_t)> dfs = [&](Vertex root, Vertex x,
                                                              std::uint32_t len) {
    if (len >= best) return;
    for (Vertex y : adj[x]) {
      if (y == root && len >= 3) best = std::min(best, len);
      if (y > root && !on_path[y]) {
        on_path[y] = true;
        dfs(root, y, len + 1);
        on_path[y] = false;
      }
    }
  };
  for (Vertex r = 0; r < n; ++r) {
    on_path[r] = true;
    dfs(r, r, 1);
    on_path[r] = false;
  }
  if (best == kInf) return std::nullopt;
  return best;
}

/// Minimum |S \ forced| over all dominating S containing `forced`, by
/// enumerating subsets of the free vertices in order of size.
inline std::size_t exhaustive_domination(const Adjacency& adj, const std::vector<Vertex>& forced) {
  const std::size_t n = adj.size();
  std::vector<bool> is_forced(n, false);
  for (Vertex f : forced) is_forced[f] = true;
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (!is_forced[v]) free.push_back(v);
  auto dominates = [&](std::uint64_t mask) {
    std::vector<bool> in(n, false);
    for (Vertex v = 0; v < n; ++v) in[v] = is_forced[v];
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1U) in[free[i]] = true;
    for (Vertex v = 0; v < n; ++v) {
      bool ok = in[v];
      for (Vertex w : adj[v]) ok = ok || in[w];
      if (!ok) return false;
    }
    return true;
  };
  std::size_t best = free.size();
  for (std::uint64_t mask = 0; mask < (1ULL << free.size()); ++mask) {
    const auto c = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (c < best && dominates(mask)) best = c;
  }
  return best;
}

inline bool dominates(const Adjacency& adj, const std::vector<Vertex>& set) {
  std::vector<bool> in(adj.size(), false);
  for (Vertex v : set) in[v] = true;
  for (Vertex v = 0; v < adj.size(); ++v) {
    bool ok = in[v];
    for (Vertex w : adj[v]) ok = ok || in[w];
    if (!ok) return false;
  }
  return true;
}

/// Optimal cost over every legal strategy of the view's center, computed by
/// evaluating delta() on all subsets of the admissible endpoints.
struct BruteForce {
  double cost;
  std::size_t subsets;
};

inline BruteForce brute_best_response(const View& view, const GameConfig& cfg) {
  const Vertex c = view.center_local;
  const auto in = view.graph.in_neighbors(c);
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < view.size(); ++v)
    if (v != c && !std::binary_search(in.begin(), in.end(), v))
      candidates.push_back(view.vertices[v]);
  double usage = 0.0;
  for (std::uint32_t d : view.dist)
    usage = cfg.variant == Variant::Max ? std::max(usage, double(d)) : usage + d;
  const double now = cfg.alpha * view.graph.bought(c) + usage;
  double best = std::numeric_limits<double>::infinity();
  const std::uint64_t total = 1ULL << candidates.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask >> i & 1U) s.push_back(candidates[i]);
    const DeltaOutcome out = delta(view, Strategy(s), cfg);
    if (out.is_finite()) best = std::min(best, now + out.value());
  }
  return {best, total};
}

/// Random connected owned graph: random spanning tree plus extra edges,
/// fair-coin owners.
inline OwnedGraph random_connected(std::size_t n, double extra_p, std::mt19937_64& rng) {
  OwnedGraph g(n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex parent = static_cast<Vertex>(rng() % v);
    if (rng() & 1U) g.add_edge(v, parent); else g.add_edge(parent, v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && unit(rng) < extra_p) {
        if (rng() & 1U) g.add_edge(u, v); else g.add_edge(v, u);
      }
  return g;
}

/// The view graph as a standalone network (original = local ids), extended
/// with fresh vertices that touch only frontier vertices or other fresh
/// vertices. The ball of radius k around the center is unchanged.
inline OwnedGraph legal_extension(const View& view, std::mt19937_64& rng) {
  const std::vector<Vertex> frontier = view.frontier();
  std::size_t fresh = frontier.empty() ? 0 : 1 + rng() % 8;
  OwnedGraph g(view.size() + fresh);
  for (const OwnedEdge& e : view.graph.edges()) g.add_edge(e.owner, e.owner == e.a ? e.b : e.a);
  if (fresh == 0) return g;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Vertex base = static_cast<Vertex>(view.size());
  for (Vertex i = 0; i < fresh; ++i) {
    const Vertex x = base + i;
    // Anchor: a frontier vertex or an earlier fresh vertex.
    if (i == 0 || rng() % 2 == 0) {
      g.add_edge(x, frontier[rng() % frontier.size()]);
    } else {
      g.add_edge(x, base + static_cast<Vertex>(rng() % i));
    }
    // Extra links to other frontier vertices create shortcuts outside the ball.
    for (Vertex f : frontier)
      if (!g.has_edge(x, f) && unit(rng) < 0.25) g.add_edge(x, f);
    for (Vertex j = 0; j < i; ++j)
      if (!g.has_edge(x, base + j) && unit(rng) < 0.3) g.add_edge(base + j, x);
  }
  return g;
}

}  // namespace ncg::oracle
