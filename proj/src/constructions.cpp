#include "ncg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "ncg/errors.hpp"

namespace ncg {

OwnedGraph build_cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  OwnedGraph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return g;
}

OwnedGraph heawood() {
  constexpr Vertex kN = 14;
  OwnedGraph g(kN);
  for (Vertex i = 0; i < kN; ++i) g.add_edge(i, (i + 1) % kN);
  // LCF notation [5, -5]^7: even vertices reach forward by 5.
  for (Vertex i = 0; i < kN; i += 2) g.add_edge(i, (i + 5) % kN);
  return g;
}

void TorusParams::validate() const {
  if (d < 2) throw ParamError("torus needs d >= 2");
  if (ell < 2) throw ParamError("torus needs ell >= 2 (no ownership rule exists for ell = 1)");
  if (delta.size() != d) {
    throw ParamError("expected " + std::to_string(d) + " side lengths, got " +
                     std::to_string(delta.size()));
  }
  for (std::uint32_t side : delta) {
    if (side < 2) throw ParamError("every side length must be at least 2");
  }
  if (d > 16) throw ParamError("d > 16 is not supported");
}

std::size_t TorusParams::intersection_count() const {
  std::size_t n = 2;
  for (std::uint32_t side : delta) n *= side;
  return n;
}

std::size_t TorusParams::vertex_count() const {
  return intersection_count() * ((std::size_t{1} << (d - 1)) * (ell - 1) + 1);
}

std::int64_t TorusGraph::period(std::size_t dim) const {
  return 2 * static_cast<std::int64_t>(params.delta.at(dim)) * params.ell;
}

Coord TorusGraph::normalize(Coord c) const {
  if (open) return c;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t p = period(i);
    c[i] = ((c[i] % p) + p) % p;
  }
  return c;
}

std::optional<Vertex> TorusGraph::find(const Coord& c) const {
  auto it = index.find(normalize(c));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::int64_t TorusGraph::coordinate_bound(Vertex x, Vertex y) const {
  const Coord& a = labels.at(x);
  const Coord& b = labels.at(y);
  std::int64_t bound = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = std::llabs(a[i] - b[i]);
    if (!open) diff = std::min(diff, period(i) - diff);
    bound = std::max(bound, diff);
  }
  return bound;
}

namespace {

Coord offset(const Coord& base, std::uint32_t mask, std::int64_t step) {
  Coord c = base;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += (mask >> i & 1U) ? step : -step;
  return c;
}

TorusGraph build(const TorusParams& p, bool open) {
  p.validate();
  TorusGraph t;
  t.params = p;
  t.open = open;

  auto add_vertex = [&](const Coord& label, bool is_intersection) {
    const auto [it, inserted] = t.index.emplace(label, static_cast<Vertex>(t.labels.size()));
    if (!inserted) {
      throw ParamError("label collision while building the torus; increase the side lengths");
    }
    t.labels.push_back(label);
    t.intersection.push_back(is_intersection);
    return it->second;
  };

  // Intersection vertices in lexicographic order of their coordinates.
  std::vector<std::int64_t> a(p.d);
  const std::int64_t lo = open ? 1 : 0;
  for (std::size_t i = 0; i < p.d; ++i) a[i] = lo;
  bool more = true;
  while (more) {
    bool same_parity = true;
    for (std::size_t i = 1; i < p.d; ++i) same_parity &= ((a[i] - a[0]) % 2 == 0);
    if (same_parity) {
      Coord c(p.d);
      for (std::size_t i = 0; i < p.d; ++i) c[i] = a[i] * p.ell;
      add_vertex(c, true);
    }
    // Odometer step, last dimension fastest.
    more = false;
    for (std::size_t i = p.d; i-- > 0;) {
      const std::int64_t hi = open ? p.delta[i] : 2 * static_cast<std::int64_t>(p.delta[i]) - 1;
      if (a[i] < hi) {
        ++a[i];
        more = true;
        break;
      }
      a[i] = lo;
    }
  }

  const std::size_t intersections = t.labels.size();
  struct PathEdge {
    Vertex owner;
    Vertex other;
  };
  std::vector<PathEdge> edges;
  for (Vertex x = 0; x < intersections; ++x) {
    const Coord from = t.labels[x];
    for (std::uint32_t mask = 0; mask < (1U << p.d); ++mask) {
      const auto target = t.find(offset(from, mask, p.ell));
      if (!target || !t.intersection[*target]) continue;
      if (!(from < t.labels[*target])) continue;  // oriented from the smaller endpoint
      std::vector<Vertex> path{x};
      for (std::uint32_t j = 1; j < p.ell; ++j) {
        path.push_back(add_vertex(t.normalize(offset(from, mask, j)), false));
      }
      path.push_back(*target);
      for (std::size_t j = 1; j + 1 < path.size(); ++j) edges.push_back({path[j], path[j - 1]});
      edges.push_back({path[path.size() - 2], path.back()});
    }
  }

  t.graph = OwnedGraph(t.labels.size());
  for (const PathEdge& e : edges) {
    if (t.graph.has_edge(e.owner, e.other)) {
      throw ParamError("parallel edge while building the torus; increase the side lengths");
    }
    t.graph.add_edge(e.owner, e.other);
  }
  return t;
}

}  // namespace

TorusGraph build_torus(const TorusParams& p) { return build(p, false); }

TorusGraph build_open_torus(const TorusParams& p) { return build(p, true); }

std::vector<Vertex> f_set(const TorusGraph& torus, Vertex v, std::uint32_t h) {
  if (v >= torus.labels.size() || !torus.intersection[v]) {
    throw PreconditionError("f_set needs an intersection vertex");
  }
  std::vector<Vertex> result;
  for (std::uint32_t mask = 0; mask < (1U << torus.params.d); ++mask) {
    if (auto w = torus.find(offset(torus.labels[v], mask, h))) result.push_back(*w);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

TorusParams torus_params_for(double alpha, std::uint32_t k, std::optional<std::uint32_t> delta_d) {
  if (!(alpha > 1.0) || alpha > static_cast<double>(k)) {
    throw RangeError("torus parameters need 1 < alpha <= k");
  }
  TorusParams p;
  p.ell = static_cast<std::uint32_t>(std::ceil(alpha));
  const double ratio = static_cast<double>(k) / p.ell;
  p.d = static_cast<std::uint32_t>(std::ceil(std::log2(ratio + 2.0) - 1e-12));
  const auto side = static_cast<std::uint32_t>((k + p.ell - 1) / p.ell) + 1;
  p.delta.assign(p.d, side);
  if (delta_d) {
    if (*delta_d < side) throw RangeError("delta_d must be at least delta_1");
    p.delta.back() = *delta_d;
  }
  return p;
}

TorusParams sum_torus_params(std::uint32_t k, std::uint32_t delta_2) {
  if (k < 1) throw RangeError("k must be at least 1");
  TorusParams p;
  p.d = 2;
  p.ell = 2;
  const std::uint32_t side = (k + 1) / 2 + 1;
  if (delta_2 < side) throw RangeError("delta_2 must be at least delta_1");
  p.delta = {side, delta_2};
  return p;
}

}  // namespace ncg
