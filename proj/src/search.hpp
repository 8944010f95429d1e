#pragma once

// Individualization-refinement kernel shared by automorphism enumeration,
// group-order computation, rigidity tests and isomorphism search.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

namespace symbreak::detail {

/// Ordered partition of the vertex set. cell[v] is the position of v's cell;
/// `trace` hashes the sequence of splits that produced it and is the
/// invariant compared between the two sides of a search.
struct CellPartition {
  std::vector<int> cell;
  int count = 0;
  std::uint64_t trace = 0;
};

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g) {}

  /// Cells ordered by color value; empty `colors` means one cell.
  CellPartition initial(std::span<const int> colors) const;

  /// Colour refinement to the coarsest equitable refinement. Subcells are
  /// ordered by (old cell, neighbor-cell multiset hash), so the result is
  /// equivariant under isomorphisms.
  void refine(CellPartition& p) const;

  /// Puts v in a singleton cell directly before the rest of its cell.
  CellPartition individualize(const CellPartition& p, int v) const;

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
};

/// Backtracking search for isomorphisms from `left` onto `right` that map
/// colors to equal colors. The left side follows one fixed individualization
/// path; every leaf on the right yields a candidate that is verified edge by
/// edge.
class PairSearch {
 public:
  PairSearch(const Graph& left, std::span<const int> left_colors, const Graph& right,
             std::span<const int> right_colors, NodeCounter& counter);

  /// False when the root partitions already disagree.
  bool roots_compatible() const { return compatible_; }

  /// Visits every isomorphism; `visit` returns false to stop early.
  void enumerate(const std::function<bool(const Permutation&)>& visit);

  /// First isomorphism found, if any.
  std::optional<Permutation> first();

  /// Automorphism mode only (left == right): order/generators/orbits via the
  /// stabilizer chain along the left path.
  struct Chain {
    std::uint64_t order = 1;
    std::vector<Permutation> generators;
    std::vector<int> orbits;
  };
  Chain stabilizer_chain();

  /// Automorphism mode only: some non-identity automorphism.
  std::optional<Permutation> nontrivial();

 private:
  bool descend(int level, const CellPartition& q,
               const std::function<bool(const Permutation&)>& visit);
  std::optional<Permutation> leaf_map(const CellPartition& q) const;
  std::optional<Permutation> search_below(int level, int w);

  Refiner left_;
  Refiner right_;
  NodeCounter& counter_;
  bool compatible_ = false;
  // Left path: path_[i] is the partition before individualizing chosen_[i]
  // inside cell target_[i]; path_.back() is discrete.
  std::vector<CellPartition> path_;
  std::vector<int> target_;
  std::vector<int> chosen_;
  CellPartition right_root_;
};

}  // namespace symbreak::detail
