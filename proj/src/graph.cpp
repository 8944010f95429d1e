#include "symbreak/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symbreak/error.hpp"

namespace symbreak {

Graph::Graph() : Graph(1, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw InvalidArgument("graph order must be at least 1, got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  nbrs_.resize(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") out of range for order " + std::to_string(n));
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    adj_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!adjacent(u, v)) continue;
      nbrs_[u].push_back(v);
      if (u < v) edges_.push_back({u, v});
    }
  }
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph make_family(Family kind, int n) {
  if (n < 1) throw InvalidArgument("family order must be positive");
  std::vector<Edge> edges;
  switch (kind) {
    case Family::path:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::cycle:
      if (n < 3) throw InvalidArgument("invalid family: cycle needs at least 3 vertices");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      break;
    case Family::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      break;
  }
  return Graph(n, edges);
}

std::string to_string(Family kind) {
  switch (kind) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
  }
  return "?";
}

Graph make_complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph(g.order(), edges);
}

Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  if (g.order() == 1) throw InvalidArgument("cannot remove the only vertex");
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back({shift(e.u), shift(e.v)});
  return Graph(g.order() - 1, edges);
}

std::vector<int> neighborhood(const Graph& g, int v, bool closed) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  std::vector<int> out = g.neighbors(v);
  if (closed) out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

std::string to_string(TwinStatus status) {
  switch (status) {
    case TwinStatus::false_twins: return "false_twins";
    case TwinStatus::true_twins: return "true_twins";
    case TwinStatus::not_twins: return "not_twins";
  }
  return "?";
}

TwinStatus twin_status(const Graph& g, int u, int v) {
  if (u == v) throw InvalidArgument("twin_status needs two distinct vertices");
  if (neighborhood(g, u, false) == neighborhood(g, v, false)) return TwinStatus::false_twins;
  if (neighborhood(g, u, true) == neighborhood(g, v, true)) return TwinStatus::true_twins;
  return TwinStatus::not_twins;
}

bool has_false_twins(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) return true;
  return false;
}

std::vector<int> dominating_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.push_back(v);
  return out;
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == g.order();
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return false;
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Edge& e) { return g.adjacent(e.u, e.v); });
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - 1) / 2;
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
  const int n = g.order();
  auto twins = [&](int u, int v) {
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
    }
    return true;
  };
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    cls[u] = static_cast<int>(out.size());
    out.push_back({u});
    for (int v = u + 1; v < n; ++v) {
      if (cls[v] < 0 && twins(u, v)) {
        cls[v] = cls[u];
        out.back().push_back(v);
      }
    }
  }
  return out;
}

std::optional<Family> path_or_cycle(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  const int n = g.order();
  int max_degree = 0;
  for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
  if (max_degree > 2) return std::nullopt;
  if (g.size() + 1 == static_cast<std::size_t>(n)) return Family::path;
  if (n >= 3 && g.size() == static_cast<std::size_t>(n)) return Family::cycle;
  return std::nullopt;
}

}  // namespace symbreak
