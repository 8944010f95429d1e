#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/budget.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/symmetry.hpp"

namespace symbreak {

/// Labels 1..label_count, one per vertex.
struct VertexLabeling {
  std::vector<int> labels;
  int label_count = 1;
};

/// Labels 1..label_count, one per edge in the graph's sorted edge order.
struct EdgeLabeling {
  std::vector<int> labels;
  int label_count = 1;
};

enum class SolveMode { exact, certificate };

/// Why `value - 1` labels cannot suffice.
enum class LowerBoundBasis {
  exhaustive,        // every labeling with value - 1 labels was rejected
  nontrivial_group,  // value is 2 and the graph has a non-identity automorphism
  rigid,             // value is 1
};

std::string to_string(SolveMode mode);
std::string to_string(LowerBoundBasis basis);

struct DistinguishingResult {
  int value = 1;
  SolveMode mode = SolveMode::exact;
  /// False only in certificate mode when `value` >= 3 is an upper bound.
  bool exact = true;
  /// Verified distinguishing labeling with `value` labels.
  std::vector<int> witness;
  LowerBoundBasis lower_bound_basis = LowerBoundBasis::rigid;
};

/// Checks a labeling against an explicit group: true iff no non-identity
/// element preserves every label. Raises InvalidArgument on a length or
/// range mismatch.
bool is_distinguishing(const Graph& g, const AutomorphismGroup& group,
                       const VertexLabeling& labeling);
bool is_distinguishing(const Graph& g, const AutomorphismGroup& group,
                       const EdgeLabeling& labeling);

/// Same questions answered without listing the group: the labeling is
/// distinguishing iff the labeled graph is rigid. For edges the labels
/// color the subdivision vertices. Both need a faithful edge action for the
/// edge form (see edge_action_is_faithful).
bool is_distinguishing(const Graph& g, const VertexLabeling& labeling, const Budget& budget = {});
bool is_distinguishing(const Graph& g, const EdgeLabeling& labeling, const Budget& budget = {});

/// True iff only the identity automorphism fixes every edge. Fails exactly
/// when g has a K2 component or two isolated vertices.
bool edge_action_is_faithful(const Graph& g, const Budget& budget = {});

/// D(G). Exact mode proves minimality by exhausting value - 1 labels;
/// certificate mode is exact for values 1 and 2 and may return an upper
/// bound (exact == false) above that. Labelings are searched up to renaming
/// of labels, pruned whenever a symmetry is already fixed by the labeled
/// prefix. `seed` drives the random candidates tried first.
DistinguishingResult distinguishing_number(const Graph& g, SolveMode mode = SolveMode::exact,
                                           std::uint64_t seed = 0, const Budget& budget = {});

/// D'(G), same contract with edge labelings. Raises UndefinedQuantity when g
/// has no edges or its automorphisms do not act faithfully on the edges.
DistinguishingResult distinguishing_index(const Graph& g, SolveMode mode = SolveMode::exact,
                                          std::uint64_t seed = 0, const Budget& budget = {});

/// Labeling of conormal(g, h) that gives row h (1-based i) the label block
/// (i-1)*d + c(x), where c labels g with d labels. In 0-based product
/// indices: label(x, y) = y * d + c[x]. Uses d * |V(h)| labels.
/// Raises InvalidArgument unless c distinguishes g.
VertexLabeling label_by_left_factor(const Graph& g, const Graph& h, const VertexLabeling& c,
                                    const Budget& budget = {});

/// The mirror image: label(x, y) = x * d + c[y] for c distinguishing h,
/// using |V(g)| * d labels.
VertexLabeling label_by_right_factor(const Graph& g, const Graph& h, const VertexLabeling& c,
                                     const Budget& budget = {});

/// Extends a distinguishing edge labeling of the spanning subgraph `sub` to
/// `g`, giving every edge of g outside sub the label `repeated_label`.
/// Requires sub spanning g, every automorphism of g to be one of sub, and
/// `labeling` to distinguish sub; each violation raises InvalidArgument
/// naming the failed hypothesis.
EdgeLabeling lift_edge_labeling(const Graph& g, const Graph& sub, const EdgeLabeling& labeling,
                                int repeated_label, const Budget& budget = {});

/// True iff every automorphism of g is an automorphism of sub (checked on a
/// generating set of Aut(g)).
bool automorphisms_preserved_by(const Graph& g, const Graph& sub, const Budget& budget = {});

/// Hamiltonian path test: subset dynamic programming up to 20 vertices,
/// budgeted backtracking above.
bool is_traceable(const Graph& g, const Budget& budget = {});

}  // namespace symbreak
