#pragma once

#include <cstdint>
#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

/// Labelled tree on n >= 2 vertices drawn uniformly from all n^(n-2) trees
/// (Pruefer decoding of a uniform sequence). Every edge's owner is an
/// independent fair coin between its endpoints.
OwnedGraph random_tree(std::size_t n, std::uint64_t seed);

/// Tree with the given Pruefer sequence (length n - 2, entries < n), edges
/// owned by their smaller endpoint. Throws PreconditionError.
OwnedGraph tree_from_pruefer(const std::vector<Vertex>& sequence);

/// G(n, p) conditioned on connectivity by rejection; random fair-coin
/// ownership. Throws MaxAttemptsExceeded after `max_attempts` disconnected
/// samples.
OwnedGraph gnp_connected(std::size_t n, double p, std::uint64_t seed,
                         std::size_t max_attempts = 1000);

}  // namespace ncg
