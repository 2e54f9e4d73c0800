#pragma once

#include "ncg/graph.hpp"

namespace ncg::testing {

/// Star with center 0; leaves own their edge unless `center_owns`.
inline OwnedGraph star(std::size_t n, bool center_owns = false) {
  OwnedGraph g(n);
  for (Vertex leaf = 1; leaf < n; ++leaf) {
    if (center_owns) g.add_edge(0, leaf); else g.add_edge(leaf, 0);
  }
  return g;
}

/// Path 0 - 1 - ... - (n-1); vertex i owns (i, i+1).
inline OwnedGraph path(std::size_t n) {
  OwnedGraph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace ncg::testing
