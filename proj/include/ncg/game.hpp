#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

enum class Variant { Max, Sum };

std::string_view to_string(Variant v);
/// Accepts "max" / "sum" (case-insensitive). Throws PreconditionError.
Variant parse_variant(std::string_view text);

/// Absolute tolerance used whenever two costs are compared.
inline constexpr double kCostTolerance = 1e-9;

struct GameConfig {
  Variant variant = Variant::Max;
  double alpha = 1.0;  // edge price
  std::uint32_t k = 1;  // view radius

  /// Throws PreconditionError unless alpha > 0 and k >= 1.
  void validate() const;
};

/// Endpoints bought by the acting player, kept sorted and duplicate free.
class Strategy {
 public:
  Strategy() = default;
  explicit Strategy(std::vector<Vertex> endpoints);

  std::span<const Vertex> endpoints() const { return endpoints_; }
  std::size_t size() const { return endpoints_.size(); }
  bool empty() const { return endpoints_.empty(); }

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<Vertex> endpoints_;
};

/// Result of evaluating a strategy switch on a view.
class DeltaOutcome {
 public:
  enum class Kind { Finite, RejectedFrontier, Disconnecting };

  static DeltaOutcome finite(double value) { return DeltaOutcome(Kind::Finite, value); }
  static DeltaOutcome rejected_frontier() { return DeltaOutcome(Kind::RejectedFrontier, 0.0); }
  static DeltaOutcome disconnecting() { return DeltaOutcome(Kind::Disconnecting, 0.0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Only meaningful for Finite outcomes.
  double value() const { return value_; }

 private:
  DeltaOutcome(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

/// alpha * |sigma_u| plus eccentricity (Max) or distance sum (Sum);
/// nullopt when some vertex is unreachable from u.
std::optional<double> player_cost(const OwnedGraph& g, Vertex u, const GameConfig& cfg);

/// Sum of all player costs; nullopt for disconnected graphs.
std::optional<double> social_cost(const OwnedGraph& g, const GameConfig& cfg);

/// Social cost of the spanning star on n >= 2 vertices.
double star_cost(std::size_t n, const GameConfig& cfg);

/// Worst-case cost change of the view's center switching to `next`
/// (original vertex ids). The worst-case network is the view itself; in the
/// Sum variant any switch that pushes a frontier vertex beyond distance k is
/// rejected outright. Throws PreconditionError if an endpoint lies outside
/// the view, is the center, or already holds an edge bought towards the
/// center.
DeltaOutcome delta(const View& view, const Strategy& next, const GameConfig& cfg);

/// Strictly negative finite Delta.
bool is_improving(const DeltaOutcome& outcome);

}  // namespace ncg
