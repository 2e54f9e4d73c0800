#include "ncg/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include "json.hpp"
#include <ostream>

#include "ncg/errors.hpp"

namespace ncg {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Equilibrium:
      return "equilibrium";
    case Status::CycleDetected:
      return "cycle";
    case Status::RoundCapReached:
      return "round_cap";
  }
  return "unknown";
}

RoundStats measure(const OwnedGraph& g, const GameConfig& cfg, std::size_t round,
                   std::size_t changes) {
  const std::size_t n = g.order();
  if (n < 2) throw PreconditionError("statistics need at least 2 vertices");
  RoundStats s;
  s.round = round;
  s.changes = changes;
  s.min_bought = std::numeric_limits<std::size_t>::max();
  s.min_view = std::numeric_limits<std::size_t>::max();
  double min_cost = std::numeric_limits<double>::infinity();
  double max_cost = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    std::uint32_t ecc = 0;
    double sum = 0.0;
    std::size_t view = 0;
    for (const Distance& d : dist) {
      if (!d) throw PreconditionError("statistics need a connected graph");
      ecc = std::max(ecc, *d);
      sum += *d;
      if (*d <= cfg.k) ++view;
    }
    const double cost = cfg.alpha * static_cast<double>(g.bought(u)) +
                        (cfg.variant == Variant::Max ? ecc : sum);
    s.social_cost += cost;
    min_cost = std::min(min_cost, cost);
    max_cost = std::max(max_cost, cost);
    s.diameter = std::max(s.diameter, ecc);
    s.max_degree = std::max(s.max_degree, g.degree(u));
    s.avg_degree += static_cast<double>(g.degree(u));
    s.min_bought = std::min(s.min_bought, g.bought(u));
    s.max_bought = std::max(s.max_bought, g.bought(u));
    s.avg_bought += static_cast<double>(g.bought(u));
    s.min_view = std::min(s.min_view, view);
    s.max_view = std::max(s.max_view, view);
    s.avg_view += static_cast<double>(view);
  }
  s.avg_degree /= static_cast<double>(n);
  s.avg_bought /= static_cast<double>(n);
  s.avg_view /= static_cast<double>(n);
  s.unfairness = max_cost / min_cost;
  return s;
}

namespace {

using Profile = std::vector<std::pair<Vertex, Vertex>>;  // (owner, endpoint), sorted

Profile profile_of(const OwnedGraph& g) {
  Profile p;
  p.reserve(g.size());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.strategy(u)) p.emplace_back(u, v);
  }
  return p;
}

std::uint64_t hash_profile(const Profile& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& [owner, endpoint] : p) {
    h = (h ^ owner) * 0x100000001b3ULL;
    h = (h ^ endpoint) * 0x100000001b3ULL;
    h = (h ^ 0xff) * 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

DynamicsTrace run_dynamics(OwnedGraph g0, const GameConfig& cfg, std::uint64_t seed,
                           const DynamicsOptions& options) {
  cfg.validate();
  if (!is_connected(g0)) throw PreconditionError("dynamics need a connected starting graph");
  DynamicsTrace trace;
  trace.config = cfg;
  trace.seed = seed;
  trace.initial = measure(g0, cfg);

  OwnedGraph g = std::move(g0);
  std::vector<Profile> profiles{profile_of(g)};
  std::multimap<std::uint64_t, std::size_t> seen{{hash_profile(profiles[0]), 0}};

  for (std::size_t round = 1; round <= options.round_cap; ++round) {
    std::size_t changes = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
      const View view = make_view(g, u, cfg.k);
      const BestResponse br = best_response(view, cfg, options.solver);
      if (br.delta_vs_current < -kCostTolerance) {
        g.set_strategy(u, br.strategy.endpoints());
        ++changes;
      }
    }
    trace.total_changes += changes;
    trace.rounds.push_back(measure(g, cfg, round, changes));
    if (changes == 0) {
      trace.status = Status::Equilibrium;
      break;
    }
    Profile current = profile_of(g);
    const std::uint64_t h = hash_profile(current);
    const auto [first, last] = seen.equal_range(h);
    for (auto it = first; it != last; ++it) {
      if (profiles[it->second] == current) {
        trace.status = Status::CycleDetected;
        trace.cycle_round = round;
        trace.cycle_first_seen = it->second;
        break;
      }
    }
    if (trace.status == Status::CycleDetected) break;
    seen.emplace(h, round);
    profiles.push_back(std::move(current));
  }
  trace.final_graph = std::move(g);
  return trace;
}

void write_rounds_jsonl(std::ostream& out, const DynamicsTrace& trace) {
  auto emit = [&](const RoundStats& s) {
    nlohmann::json j = {
        {"round", s.round},           {"changes", s.changes},
        {"social_cost", s.social_cost}, {"diameter", s.diameter},
        {"max_degree", s.max_degree}, {"avg_degree", s.avg_degree},
        {"min_bought", s.min_bought}, {"max_bought", s.max_bought},
        {"avg_bought", s.avg_bought}, {"min_view", s.min_view},
        {"max_view", s.max_view},     {"avg_view", s.avg_view},
        {"unfairness", s.unfairness},
    };
    out << j.dump() << '\n';
  };
  emit(trace.initial);
  for (const RoundStats& s : trace.rounds) emit(s);
}

}  // namespace ncg
