#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

/// Minimum dominating set where the `forced` vertices are part of every
/// solution and only the remaining chosen vertices are counted.
struct DominatingInstance {
  Adjacency graph;
  std::vector<Vertex> forced;
};

/// Exact solution: a sorted set S containing `forced`, dominating every
/// vertex, with |S \ forced| minimum.
std::vector<Vertex> min_dominating_set(const DominatingInstance& inst);

/// Same search with a cap on the number of non-forced vertices. Returns
/// nullopt when no solution within `budget` exists.
std::optional<std::vector<Vertex>> min_dominating_set_within(const DominatingInstance& inst,
                                                             std::size_t budget);

}  // namespace ncg
