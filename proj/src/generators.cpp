#include "ncg/generators.hpp"

#include <functional>
#include <queue>
#include <string>

#include "ncg/errors.hpp"
#include "ncg/rng.hpp"

namespace ncg {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::string_view purpose) {
  // FNV-1a of the purpose tag, folded into the seed.
  std::uint64_t tag = 0xcbf29ce484222325ULL;
  for (unsigned char ch : purpose) {
    tag ^= ch;
    tag *= 0x100000001b3ULL;
  }
  return Rng(mix64(seed ^ mix64(tag)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below needs a positive bound");
  // Rejection on the top multiple of bound keeps the draw unbiased.
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = next();
    if (x >= limit) return x % bound;
  }
}

OwnedGraph tree_from_pruefer(const std::vector<Vertex>& sequence) {
  const std::size_t n = sequence.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw PreconditionError("Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  OwnedGraph g(n);
  for (Vertex v : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    g.add_edge(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  const Vertex b = leaves.top();
  g.add_edge(std::min(a, b), std::max(a, b));
  return g;
}

namespace {

OwnedGraph with_random_owners(const OwnedGraph& g, Rng& rng) {
  OwnedGraph out(g.order());
  for (const OwnedEdge& e : g.edges()) {
    if (rng.coin()) {
      out.add_edge(e.a, e.b);
    } else {
      out.add_edge(e.b, e.a);
    }
  }
  return out;
}

}  // namespace

OwnedGraph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random_tree needs n >= 2");
  Rng topology = Rng::substream(seed, "tree-topology");
  Rng ownership = Rng::substream(seed, "tree-ownership");
  std::vector<Vertex> sequence(n - 2);
  for (Vertex& v : sequence) v = static_cast<Vertex>(topology.below(n));
  return with_random_owners(tree_from_pruefer(sequence), ownership);
}

OwnedGraph gnp_connected(std::size_t n, double p, std::uint64_t seed, std::size_t max_attempts) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
  if (max_attempts < 1) throw PreconditionError("max_attempts must be at least 1");
  if (n < 1) throw PreconditionError("gnp_connected needs n >= 1");
  Rng topology = Rng::substream(seed, "gnp-topology");
  Rng ownership = Rng::substream(seed, "gnp-ownership");
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    OwnedGraph g(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (topology.unit() < p) g.add_edge(u, v);
      }
    }
    if (is_connected(g)) return with_random_owners(g, ownership);
  }
  throw MaxAttemptsExceeded("no connected G(" + std::to_string(n) + ", " + std::to_string(p) +
                            ") sample in " + std::to_string(max_attempts) + " attempts");
}

}  // namespace ncg
