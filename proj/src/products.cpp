#include "symbreak/products.hpp"

#include <vector>

#include "symbreak/error.hpp"

namespace symbreak {

ProductIndexMap index_map(const Graph& left, const Graph& right) {
  return {left.order(), right.order()};
}

Graph conormal(const Graph& left, const Graph& right) {
  const ProductIndexMap map = index_map(left, right);
  std::vector<Edge> edges;
  for (int x = 0; x < map.order(); ++x) {
    auto [g, h] = map.decode(x);
    for (int y = x + 1; y < map.order(); ++y) {
      auto [g2, h2] = map.decode(y);
      bool left_edge = g != g2 && left.adjacent(g, g2);
      bool right_edge = h != h2 && right.adjacent(h, h2);
      if (left_edge || right_edge) edges.push_back({x, y});
    }
  }
  return Graph(map.order(), edges);
}

Graph cartesian(const Graph& left, const Graph& right) {
  const ProductIndexMap map = index_map(left, right);
  std::vector<Edge> edges;
  for (int g = 0; g < left.order(); ++g)
    for (const Edge& e : right.edges()) edges.push_back({map.index(g, e.u), map.index(g, e.v)});
  for (const Edge& e : left.edges())
    for (int h = 0; h < right.order(); ++h)
      edges.push_back({map.index(e.u, h), map.index(e.v, h)});
  return Graph(map.order(), edges);
}

Graph conormal_power(const Graph& g, int k) {
  if (k < 1) throw InvalidArgument("co-normal power needs k >= 1, got " + std::to_string(k));
  Graph out = g;
  for (int i = 1; i < k; ++i) out = conormal(out, g);
  return out;
}

}  // namespace symbreak
