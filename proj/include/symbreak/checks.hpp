#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "symbreak/budget.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

enum class Verdict { holds, violated, skipped_hypotheses, skipped_budget };

std::string to_string(Verdict verdict);

struct Hypothesis {
  std::string name;
  bool met = false;
};

/// Outcome of one verifier run. A violated verdict always carries a
/// witness; skipped verdicts carry a reason.
struct CheckReport {
  std::string claim_id;
  std::vector<Hypothesis> hypotheses;
  nlohmann::json computed = nlohmann::json::object();
  Verdict verdict = Verdict::holds;
  nlohmann::json witness;  // null when absent
  std::string reason;

  bool hypotheses_met() const;
};

nlohmann::json to_json(const CheckReport& report);

struct CheckConfig {
  SolveMode mode = SolveMode::exact;
  std::uint64_t seed = 0;
  Budget budget;
  /// Exponent used when the power claim runs inside a census.
  int power = 3;
};

/// Registry entry. Identifiers are frozen; `statement` paraphrases what is
/// checked.
struct ClaimInfo {
  std::string id;
  int arity = 1;  // graphs consumed per instance
  std::string statement;
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(std::string_view id);

/// max{D(G box H), D(G), D(H)} <= D(G * H) <= min{D(G)|V(H)|, |V(G)|D(H)}
/// for connected G, H, with both block labelings verified on G * H.
CheckReport check_bound_chain(const Graph& g, const Graph& h, const CheckConfig& config = {});

/// D(G * H) = D(G box H) for connected, non-isomorphic, non-rigid factors
/// with no false twins and no dominating vertices.
CheckReport check_cartesian_equality(const Graph& g, const Graph& h,
                                     const CheckConfig& config = {});

/// Brute-forces both sides of the equal-neighborhood and dominating-vertex
/// characterizations of the co-normal product.
CheckReport check_product_lemmas(const Graph& g, const Graph& h, const CheckConfig& config = {});

/// Automorphism-group statements: product maps (and the coordinate swap for
/// isomorphic factors) are automorphisms; factorization iff twin-free and
/// dominating-free; rigid isomorphic factors give order 2; rigidity of the
/// product iff rigid non-isomorphic factors; |Aut(G * H)| = |Aut(H)| iff
/// no dominating vertex in rigid G and no false twins in H.
CheckReport check_group_theorems(const Graph& g, const Graph& h, const CheckConfig& config = {});

/// D and D' of the k-th co-normal power are 2 (k >= 3, or k >= 2 for rigid
/// G) when G is connected with no false twins and no dominating vertex.
CheckReport check_power_theorems(const Graph& g, int k, const CheckConfig& config = {});

/// D'(G * H) <= D'(G box H) + 1; <= D'(G box H) under the twin/dominating
/// hypotheses; D'(G * K_m) = 2 except K2 * K2; the path/cycle values.
CheckReport check_index_theorems(const Graph& g, const Graph& h, const CheckConfig& config = {});

/// D'(G) <= D'(H) + 1 when H spans or almost spans G; D'(G) <= D'(H) with a
/// verified lifted labeling when H spans G and Aut(G) <= Aut(H).
CheckReport check_spanning_lemmas(const Graph& g, const Graph& sub,
                                  const CheckConfig& config = {});

/// Traceable graphs of order >= 7 have D' <= 2.
CheckReport check_traceable_index(const Graph& g, const CheckConfig& config = {});

/// D(G) = D(complement of G) and both have the same group order.
CheckReport check_complement_invariance(const Graph& g, const CheckConfig& config = {});

/// Known values for paths, cycles and complete graphs.
CheckReport check_family_values(const Graph& g, const CheckConfig& config = {});

/// Dispatches by claim id. `graphs` must hold the claim's arity; raises
/// InvalidArgument for unknown ids.
CheckReport run_claim(std::string_view id, std::span<const Graph> graphs,
                      const CheckConfig& config = {});

}  // namespace symbreak
