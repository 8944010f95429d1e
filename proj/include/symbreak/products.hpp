#pragma once

#include <utility>

#include "symbreak/graph.hpp"

namespace symbreak {

/// Vertex numbering of a product on V(left) x V(right): row-major with the
/// left factor major, so (g, h) -> g * n_right + h.
struct ProductIndexMap {
  int n_left = 1;
  int n_right = 1;

  int index(int g, int h) const { return g * n_right + h; }
  std::pair<int, int> decode(int x) const { return {x / n_right, x % n_right}; }
  int order() const { return n_left * n_right; }
};

ProductIndexMap index_map(const Graph& left, const Graph& right);

/// Co-normal product: (g,h) ~ (g',h') iff gg' in E(left) or hh' in E(right).
Graph conormal(const Graph& left, const Graph& right);

/// Cartesian product: equal in one coordinate and adjacent in the other.
Graph cartesian(const Graph& left, const Graph& right);

/// Left fold: power(g, 1) = g, power(g, k) = conormal(power(g, k-1), g).
/// Raises InvalidArgument for k < 1.
Graph conormal_power(const Graph& g, int k);

}  // namespace symbreak
