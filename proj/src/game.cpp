#include "ncg/game.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ncg/errors.hpp"

namespace ncg {

std::string_view to_string(Variant v) { return v == Variant::Max ? "max" : "sum"; }

Variant parse_variant(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "max") return Variant::Max;
  if (lower == "sum") return Variant::Sum;
  throw PreconditionError("unknown variant '" + std::string(text) + "' (expected max|sum)");
}

void GameConfig::validate() const {
  if (!(alpha > 0.0)) throw PreconditionError("alpha must be positive");
  if (k < 1) throw PreconditionError("k must be at least 1");
}

Strategy::Strategy(std::vector<Vertex> endpoints) : endpoints_(std::move(endpoints)) {
  std::sort(endpoints_.begin(), endpoints_.end());
  endpoints_.erase(std::unique(endpoints_.begin(), endpoints_.end()), endpoints_.end());
}

namespace {

// Usage term of u given BFS distances; nullopt if something is unreachable.
std::optional<double> usage(const std::vector<Distance>& dist, Variant variant) {
  double total = 0.0;
  std::uint32_t worst = 0;
  for (const Distance& d : dist) {
    if (!d) return std::nullopt;
    total += *d;
    worst = std::max(worst, *d);
  }
  return variant == Variant::Max ? static_cast<double>(worst) : total;
}

}  // namespace

std::optional<double> player_cost(const OwnedGraph& g, Vertex u, const GameConfig& cfg) {
  const auto use = usage(bfs_distances(g, u), cfg.variant);
  if (!use) return std::nullopt;
  return cfg.alpha * static_cast<double>(g.bought(u)) + *use;
}

std::optional<double> social_cost(const OwnedGraph& g, const GameConfig& cfg) {
  double total = 0.0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto c = player_cost(g, u, cfg);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

double star_cost(std::size_t n, const GameConfig& cfg) {
  if (n < 2) throw PreconditionError("star cost needs n >= 2");
  const double leaves = static_cast<double>(n - 1);
  if (cfg.variant == Variant::Max) {
    if (n == 2) return cfg.alpha + 2.0;  // a single edge: both ends have eccentricity 1
    return cfg.alpha * leaves + 1.0 + 2.0 * leaves;
  }
  return cfg.alpha * leaves + leaves + leaves * (1.0 + 2.0 * static_cast<double>(n - 2));
}

DeltaOutcome delta(const View& view, const Strategy& next, const GameConfig& cfg) {
  const Vertex c = view.center_local;
  OwnedGraph switched = view.graph;
  std::vector<Vertex> local;
  local.reserve(next.size());
  for (Vertex v : next.endpoints()) {
    const auto l = view.local_of(v);
    if (!l) {
      throw PreconditionError("endpoint " + std::to_string(v) + " is outside the view of " +
                              std::to_string(view.center));
    }
    local.push_back(*l);
  }
  switched.set_strategy(c, local);

  const std::vector<Distance> after = bfs_distances(switched, c);
  const auto use_after = usage(after, cfg.variant);
  if (!use_after) return DeltaOutcome::disconnecting();

  if (cfg.variant == Variant::Sum) {
    for (Vertex y : view.frontier()) {
      if (*after[y] > view.radius) return DeltaOutcome::rejected_frontier();
    }
  }

  double use_before = 0.0;
  for (std::uint32_t d : view.dist) {
    use_before = cfg.variant == Variant::Max ? std::max(use_before, static_cast<double>(d))
                                             : use_before + d;
  }
  const double building = cfg.alpha * (static_cast<double>(next.size()) -
                                       static_cast<double>(view.graph.bought(c)));
  return DeltaOutcome::finite(building + *use_after - use_before);
}

bool is_improving(const DeltaOutcome& outcome) {
  return outcome.is_finite() && outcome.value() < -kCostTolerance;
}

}  // namespace ncg
