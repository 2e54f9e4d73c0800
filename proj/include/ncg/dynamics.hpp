#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncg/best_response.hpp"
#include "ncg/game.hpp"
#include "ncg/graph.hpp"

namespace ncg {

/// Metrics of one end-of-round network.
struct RoundStats {
  std::size_t round = 0;  // 0 describes the starting network
  std::size_t changes = 0;
  double social_cost = 0.0;
  std::uint32_t diameter = 0;
  std::size_t max_degree = 0;
  double avg_degree = 0.0;
  std::size_t min_bought = 0;
  std::size_t max_bought = 0;
  double avg_bought = 0.0;
  std::size_t min_view = 0;  // view sizes count the player herself
  std::size_t max_view = 0;
  double avg_view = 0.0;
  double unfairness = 1.0;  // highest over lowest player cost
};

/// Requires a connected graph with at least 2 vertices.
RoundStats measure(const OwnedGraph& g, const GameConfig& cfg, std::size_t round = 0,
                   std::size_t changes = 0);

enum class Status { Equilibrium, CycleDetected, RoundCapReached };
std::string_view to_string(Status s);

struct DynamicsOptions {
  std::size_t round_cap = 1000;
  SolverOptions solver;
};

struct DynamicsTrace {
  GameConfig config;
  std::uint64_t seed = 0;
  RoundStats initial;
  std::vector<RoundStats> rounds;  // rounds[i].round == i + 1
  Status status = Status::RoundCapReached;
  /// For CycleDetected: the round whose end profile repeated an earlier one,
  /// and that earlier round (0 is the starting profile).
  std::optional<std::size_t> cycle_round;
  std::optional<std::size_t> cycle_first_seen;
  std::size_t total_changes = 0;
  OwnedGraph final_graph;
};

/// Round-robin best-response dynamics. Players move in id order; each
/// recomputes her view right before her turn and switches to her best
/// response only if it is strictly improving. Stops at a round without
/// changes, at a repeated end-of-round profile, or at the round cap.
DynamicsTrace run_dynamics(OwnedGraph g0, const GameConfig& cfg, std::uint64_t seed,
                           const DynamicsOptions& options = {});

/// One JSON object per line, one line per round (starting network first).
void write_rounds_jsonl(std::ostream& out, const DynamicsTrace& trace);

}  // namespace ncg
