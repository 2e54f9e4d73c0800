#pragma once

#include <cstddef>
#include <optional>

#include "ncg/game.hpp"
#include "ncg/graph.hpp"

namespace ncg {

struct BestResponse {
  Strategy strategy;  // original vertex ids
  double cost = 0.0;  // alpha * |strategy| + usage, evaluated on the view
  double delta_vs_current = 0.0;
  bool heuristic = false;  // produced by the Sum local-move fallback
};

struct SolverOptions {
  /// Largest view (vertex count, center included) the exact Sum solver
  /// accepts. Hard upper limit is 62.
  std::size_t sum_exact_cap = 16;
  /// When set, views above the cap use single add/remove/swap moves instead
  /// of throwing ViewTooLarge.
  bool sum_heuristic_fallback = false;
};

/// Exact Max best response on the view via the forced dominating-set
/// reduction: for every target eccentricity h, dominate the (h-1)-th power of
/// the view minus the player, with the players that bought an edge towards
/// her forced into the solution.
///
/// Ties are broken by fewer bought edges; among equal-size optima the first
/// one found by the deterministic search wins.
BestResponse best_response_max(const View& view, const GameConfig& cfg);

/// Exact Sum best response by enumerating endpoint subsets in order of size
/// and then lexicographically, so ties resolve to the smallest, then
/// lexicographically first, set. Switches that disconnect a view vertex or
/// push a frontier vertex beyond distance k are infeasible. Throws
/// ViewTooLarge above `cap`.
BestResponse best_response_sum(const View& view, const GameConfig& cfg, std::size_t cap = 16);

/// Best single-edge addition, removal or swap (or the current strategy).
BestResponse sum_local_move(const View& view, const GameConfig& cfg);

BestResponse best_response(const View& view, const GameConfig& cfg,
                           const SolverOptions& options = {});

struct Witness {
  Vertex player;
  Strategy strategy;
  double delta;
};

struct LkeVerdict {
  std::optional<Witness> witness;  // first improving player, if any
  bool is_equilibrium() const { return !witness.has_value(); }
};

/// Checks every player's best response on her view. Requires a connected
/// graph. Propagates ViewTooLarge from the exact Sum solver.
LkeVerdict verify_lke(const OwnedGraph& g, const GameConfig& cfg,
                      const SolverOptions& options = {});

}  // namespace ncg
