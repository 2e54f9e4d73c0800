#include "ncg/best_response.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "ncg/dominating_set.hpp"
#include "ncg/errors.hpp"

namespace ncg {

namespace {

constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

std::vector<Vertex> to_original(const View& view, const std::vector<Vertex>& local) {
  std::vector<Vertex> result;
  result.reserve(local.size());
  for (Vertex v : local) result.push_back(view.vertices[v]);
  return result;
}

/// Candidate ordering: lower cost, then fewer edges, then lexicographic.
bool better(double cost, const std::vector<Vertex>& set, double best_cost,
            const std::vector<Vertex>& best_set) {
  if (cost < best_cost - kCostTolerance) return true;
  if (cost > best_cost + kCostTolerance) return false;
  if (set.size() != best_set.size()) return set.size() < best_set.size();
  return set < best_set;
}

double current_usage(const View& view, Variant variant) {
  double total = 0.0;
  std::uint32_t worst = 0;
  for (std::uint32_t d : view.dist) {
    total += d;
    worst = std::max(worst, d);
  }
  return variant == Variant::Max ? worst : total;
}

double current_cost(const View& view, const GameConfig& cfg) {
  return cfg.alpha * static_cast<double>(view.graph.bought(view.center_local)) +
         current_usage(view, cfg.variant);
}

std::vector<Vertex> current_strategy_local(const View& view) {
  auto s = view.graph.strategy(view.center_local);
  return {s.begin(), s.end()};
}

// Eccentricity of the center once its bought edges are replaced by `bought`.
std::optional<std::uint32_t> switched_eccentricity(const View& view,
                                                   const std::vector<Vertex>& bought) {
  const Vertex c = view.center_local;
  const Adjacency& adj = view.graph.adjacency();
  std::vector<std::uint32_t> dist(adj.size(), kFar);
  std::vector<Vertex> queue{c};
  dist[c] = 0;
  auto visit = [&](Vertex from, Vertex to) {
    if (dist[to] == kFar) {
      dist[to] = dist[from] + 1;
      queue.push_back(to);
    }
  };
  for (Vertex v : bought) visit(c, v);
  for (Vertex v : adj[c]) {
    if (*view.graph.owner(c, v) != c) visit(c, v);
  }
  for (std::size_t head = 1; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : adj[x]) {
      if (y != c) visit(x, y);
    }
  }
  if (queue.size() != adj.size()) return std::nullopt;
  return dist[queue.back()];
}

}  // namespace

BestResponse best_response_max(const View& view, const GameConfig& cfg) {
  cfg.validate();
  if (view.size() < 2) throw PreconditionError("best response needs a view with >= 2 vertices");
  const Vertex c = view.center_local;
  const std::size_t nv = view.size();

  // Vertices of the view minus the player, re-indexed 0..m-1.
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < nv; ++v) {
    if (v != c) rest.push_back(v);
  }
  const std::size_t m = rest.size();
  auto index_of = [&](Vertex local) { return local < c ? local : local - 1; };

  Adjacency without(m);
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex y : view.graph.neighbors(rest[i])) {
      if (y != c) without[i].push_back(index_of(y));
    }
  }
  std::vector<std::vector<std::uint32_t>> dist(m);
  for (Vertex i = 0; i < m; ++i) {
    const auto d = bfs_distances(without, i);
    dist[i].resize(m);
    for (Vertex j = 0; j < m; ++j) dist[i][j] = d[j] ? *d[j] : kFar;
  }

  DominatingInstance inst;
  for (Vertex v : view.graph.in_neighbors(c)) inst.forced.push_back(index_of(v));

  const double now = current_cost(view, cfg);
  std::vector<Vertex> best_set = current_strategy_local(view);
  double best_cost = now;

  for (std::uint32_t h = 1; h <= m; ++h) {
    if (static_cast<double>(h) > best_cost + kCostTolerance) break;
    const double slack = (best_cost - h) / cfg.alpha + kCostTolerance;
    if (slack < 0.0) continue;
    const auto budget = static_cast<std::size_t>(std::floor(slack));

    inst.graph.assign(m, {});
    for (Vertex i = 0; i < m; ++i) {
      for (Vertex j = i + 1; j < m; ++j) {
        if (dist[i][j] != kFar && dist[i][j] <= h - 1) {
          inst.graph[i].push_back(j);
          inst.graph[j].push_back(i);
        }
      }
    }
    const auto solution = min_dominating_set_within(inst, budget);
    if (!solution) continue;

    std::vector<Vertex> bought;
    for (Vertex i : *solution) {
      if (!std::binary_search(inst.forced.begin(), inst.forced.end(), i)) {
        bought.push_back(rest[i]);
      }
    }
    const auto ecc = switched_eccentricity(view, bought);
    // Dominating the power graph bounds the eccentricity by h.
    const double cost = cfg.alpha * static_cast<double>(bought.size()) + *ecc;
    if (better(cost, bought, best_cost, best_set)) {
      best_cost = cost;
      best_set = bought;
    }
    if (bought.empty()) break;  // larger h only adds usage
  }

  BestResponse br;
  br.strategy = Strategy(to_original(view, best_set));
  br.cost = best_cost;
  br.delta_vs_current = best_cost - now;
  return br;
}

namespace {

// Bitmask evaluation of Sum switches on views of at most 62 vertices.
class SumEvaluator {
 public:
  SumEvaluator(const View& view, const GameConfig& cfg) : view_(view), cfg_(cfg) {
    const Vertex c = view.center_local;
    const std::size_t nv = view.size();
    adj_.assign(nv, 0);
    for (Vertex x = 0; x < nv; ++x) {
      for (Vertex y : view.graph.neighbors(x)) {
        if ((x == c || y == c) && *view.graph.owner(x, y) == c) continue;
        adj_[x] |= bit(y);
      }
    }
    full_ = nv == 64 ? ~0ULL : (bit(static_cast<Vertex>(nv)) - 1);
    for (Vertex y : view.frontier()) frontier_ |= bit(y);
  }

  /// Distance sum for the given bought set, or nullopt if infeasible or
  /// provably above `limit` once alpha * |bought| is added.
  std::optional<double> cost(std::uint64_t bought, double limit) const {
    const Vertex c = view_.center_local;
    const double building = cfg_.alpha * std::popcount(bought);
    std::uint64_t reach = bit(c);
    std::uint64_t layer = bit(c);
    std::uint64_t total = 0;
    std::uint32_t d = 0;
    while (layer != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = layer; rest != 0; rest &= rest - 1) {
        const auto x = static_cast<Vertex>(std::countr_zero(rest));
        next |= adj_[x];
        if (x == c) next |= bought;
      }
      next &= ~reach;
      ++d;
      reach |= next;
      layer = next;
      total += static_cast<std::uint64_t>(d) * std::popcount(next);
      if (d == view_.radius && (frontier_ & ~reach) != 0) return std::nullopt;
      const auto missing = static_cast<std::uint64_t>(std::popcount(full_ & ~reach));
      if (building + total + missing * (d + 1) > limit + kCostTolerance) return std::nullopt;
    }
    if (reach != full_) return std::nullopt;
    return building + static_cast<double>(total);
  }

  static std::uint64_t bit(Vertex v) { return 1ULL << v; }

 private:
  const View& view_;
  const GameConfig& cfg_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t full_ = 0;
  std::uint64_t frontier_ = 0;
};

}  // namespace

BestResponse best_response_sum(const View& view, const GameConfig& cfg, std::size_t cap) {
  cfg.validate();
  if (view.size() < 2) throw PreconditionError("best response needs a view with >= 2 vertices");
  if (view.size() > cap || view.size() > 62) throw ViewTooLarge(view.size(), std::min<std::size_t>(cap, 62));
  const Vertex c = view.center_local;
  const std::size_t nv = view.size();

  const auto in = view.graph.in_neighbors(c);
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < nv; ++v) {
    if (v != c && !std::binary_search(in.begin(), in.end(), v)) candidates.push_back(v);
  }
  const std::size_t m = candidates.size();
  SumEvaluator eval(view, cfg);

  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<Vertex> best_set;
  std::vector<std::size_t> pick;
  for (std::size_t s = 0; s <= m; ++s) {
    // Every vertex is at distance >= 1, and only the s + |in| neighbours of
    // the player can be at distance exactly 1.
    const double adjacent = static_cast<double>(s + in.size());
    const double others = static_cast<double>(nv - 1) - adjacent;
    const double bound = cfg.alpha * s + adjacent + 2.0 * std::max(0.0, others);
    if (bound > best_cost + kCostTolerance) continue;

    pick.resize(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (std::size_t i : pick) mask |= SumEvaluator::bit(candidates[i]);
      if (auto cost = eval.cost(mask, best_cost); cost && *cost < best_cost - kCostTolerance) {
        best_cost = *cost;
        best_set.clear();
        for (std::size_t i : pick) best_set.push_back(candidates[i]);
      }
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == m - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  const double now = current_cost(view, cfg);
  BestResponse br;
  br.strategy = Strategy(to_original(view, best_set));
  br.cost = best_cost;
  br.delta_vs_current = best_cost - now;
  return br;
}

BestResponse sum_local_move(const View& view, const GameConfig& cfg) {
  cfg.validate();
  const Vertex c = view.center_local;
  const std::vector<Vertex> mine = current_strategy_local(view);
  const auto in = view.graph.in_neighbors(c);
  std::vector<Vertex> others;
  for (Vertex v = 0; v < view.size(); ++v) {
    if (v != c && !std::binary_search(in.begin(), in.end(), v) &&
        !std::binary_search(mine.begin(), mine.end(), v)) {
      others.push_back(v);
    }
  }

  std::vector<Vertex> best_set = mine;
  double best_delta = 0.0;
  auto consider = [&](std::vector<Vertex> local) {
    std::sort(local.begin(), local.end());
    const DeltaOutcome outcome = delta(view, Strategy(to_original(view, local)), cfg);
    if (!outcome.is_finite()) return;
    if (better(outcome.value(), local, best_delta, best_set)) {
      best_delta = outcome.value();
      best_set = std::move(local);
    }
  };
  for (Vertex add : others) {
    auto s = mine;
    s.push_back(add);
    consider(s);
  }
  for (std::size_t i = 0; i < mine.size(); ++i) {
    auto s = mine;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
    consider(s);
    for (Vertex add : others) {
      auto swapped = s;
      swapped.push_back(add);
      consider(swapped);
    }
  }

  BestResponse br;
  br.strategy = Strategy(to_original(view, best_set));
  br.cost = current_cost(view, cfg) + best_delta;
  br.delta_vs_current = best_delta;
  br.heuristic = true;
  return br;
}

BestResponse best_response(const View& view, const GameConfig& cfg, const SolverOptions& options) {
  if (cfg.variant == Variant::Max) return best_response_max(view, cfg);
  if (view.size() > options.sum_exact_cap && options.sum_heuristic_fallback) {
    return sum_local_move(view, cfg);
  }
  return best_response_sum(view, cfg, options.sum_exact_cap);
}

LkeVerdict verify_lke(const OwnedGraph& g, const GameConfig& cfg, const SolverOptions& options) {
  cfg.validate();
  if (!is_connected(g)) throw PreconditionError("LKE verification needs a connected graph");
  LkeVerdict verdict;
  if (g.order() < 2) return verdict;
  for (Vertex u = 0; u < g.order(); ++u) {
    const View view = make_view(g, u, cfg.k);
    const BestResponse br = best_response(view, cfg, options);
    if (br.delta_vs_current < -kCostTolerance) {
      verdict.witness = Witness{u, br.strategy, br.delta_vs_current};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace ncg
