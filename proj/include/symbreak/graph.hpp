#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symbreak {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on the vertices 0..n-1.
///
/// Immutable after construction. Two graphs compare equal iff they have the
/// same order and the same sorted edge list; isomorphism is a separate
/// question answered by `are_isomorphic`.
class Graph {
 public:
  /// The single-vertex graph K1.
  Graph();

  /// Builds a graph from an edge list. Edge endpoints may be given in either
  /// orientation and duplicates are merged; self-loops and out-of-range
  /// endpoints raise InvalidArgument, as does n < 1.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  /// Sorted open neighborhood of v.
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

  /// Sorted lexicographically, each edge once with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Position of {u, v} in edges(), if it is an edge.
  std::optional<std::size_t> edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<Edge> edges_;
};

enum class Family { path, cycle, complete };

/// P_n, C_n or K_n on the vertices 0..n-1. Paths and cycles follow vertex
/// order; the cycle closes with {0, n-1}.
Graph make_family(Family kind, int n);

std::string to_string(Family kind);

/// Complete bipartite graph K_{a,b}; the first a vertices form one side.
Graph make_complete_bipartite(int a, int b);

Graph complement(const Graph& g);

/// Removes v and relabels the remaining vertices in increasing order.
Graph remove_vertex(const Graph& g, int v);

/// Open (N(v)) or closed (N[v]) neighborhood, sorted. Raises
/// std::out_of_range for v outside 0..n-1.
std::vector<int> neighborhood(const Graph& g, int v, bool closed);

enum class TwinStatus { false_twins, true_twins, not_twins };

std::string to_string(TwinStatus status);

/// Raises InvalidArgument for u == v.
TwinStatus twin_status(const Graph& g, int u, int v);

bool has_false_twins(const Graph& g);

/// Vertices of degree n-1.
std::vector<int> dominating_vertices(const Graph& g);

bool is_connected(const Graph& g);

/// True iff h has g's order and every edge of h is an edge of g.
bool is_spanning_subgraph(const Graph& h, const Graph& g);

bool is_complete(const Graph& g);

/// Classes of the relation "the transposition (u v) is an automorphism",
/// i.e. N(u) \ {v} = N(v) \ {u}. Each class is a clique or an independent
/// set and every vertex outside it sees all of it or none of it. Classes are
/// listed by smallest member; members are sorted.
std::vector<std::vector<int>> twin_classes(const Graph& g);

/// Recognizes connected paths P_n (n >= 1) and cycles C_n (n >= 3) up to
/// isomorphism. Returns the family; K3 is reported as a cycle.
std::optional<Family> path_or_cycle(const Graph& g);

}  // namespace symbreak
