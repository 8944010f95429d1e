#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"
#include "symbreak/products.hpp"

namespace symbreak {

/// Complete, explicit automorphism group. The identity is elements[0] and
/// the remaining elements are sorted.
struct AutomorphismGroup {
  int degree = 1;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

/// Group order and a generating set, obtained from a stabilizer chain.
/// Works for groups far too large to list (|Aut(K16)| = 16!).
struct GroupSummary {
  std::uint64_t order = 1;
  std::vector<Permutation> generators;
  /// Orbit id per vertex (smallest vertex of the orbit).
  std::vector<int> orbits;
};

/// True iff p preserves adjacency and non-adjacency. Raises InvalidArgument
/// on a degree mismatch.
bool is_automorphism(const Graph& g, const Permutation& p);

/// Every automorphism, by individualization-refinement backtracking. Raises
/// BudgetExceeded past budget.node_limit search nodes or
/// budget.element_limit elements.
AutomorphismGroup automorphisms(const Graph& g, const Budget& budget = {});

/// Order, generators and orbits of the automorphisms of g preserving the
/// vertex colors (pass an empty span for an uncolored graph). Raises
/// BudgetExceeded, or InvalidArgument if the order overflows 64 bits.
GroupSummary automorphism_summary(const Graph& g, std::span<const int> colors = {},
                                  const Budget& budget = {});

/// Some color-preserving automorphism other than the identity, if any.
std::optional<Permutation> find_nontrivial_automorphism(const Graph& g,
                                                        std::span<const int> colors = {},
                                                        const Budget& budget = {});

bool is_rigid(const Graph& g, const Budget& budget = {});

/// An isomorphism p from g onto h (u ~ v in g iff p(u) ~ p(v) in h).
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h,
                                            const Budget& budget = {});

inline bool are_isomorphic(const Graph& g, const Graph& h, const Budget& budget = {}) {
  return find_isomorphism(g, h, budget).has_value();
}

/// The map (g, h) -> (a(g), b(h)), or with `swap` (g, h) -> (b(h), a(g)),
/// expressed on the product's vertex indices. The swap form needs
/// n_left == n_right; then a maps left onto right and b maps right onto left.
Permutation product_automorphism(const Permutation& a, const Permutation& b, bool swap,
                                 const ProductIndexMap& map);

/// True iff every automorphism of conormal(g, h) is a product (a, b) with
/// a in Aut(g) and b in Aut(h), and |Aut(g * h)| = |Aut(g)| * |Aut(h)|.
/// Enumerates all three groups explicitly.
bool aut_factorizes(const Graph& g, const Graph& h, const Budget& budget = {});

/// The induced permutation of edge positions in g.edges(). Raises
/// InvalidArgument if p is not an automorphism of g.
Permutation edge_action(const Graph& g, const Permutation& p);

}  // namespace symbreak
