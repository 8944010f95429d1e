#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/checks.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

/// All labeled graphs on exactly n vertices, in increasing order of the
/// graph6 adjacency bit string (edgeless first). `up_to_iso` keeps the
/// first member of each isomorphism class. Limits: n <= 6 with up_to_iso,
/// n <= 5 without; beyond raises InvalidArgument.
std::vector<Graph> enumerate_small_graphs(int n, bool connected_only, bool up_to_iso,
                                          const Budget& budget = {});

/// Corpus specifications:
///   gen:n=K[,connected][,iso]  graphs of every order 1..K
///   families:n=K               P_n, C_n, K_n for every valid order <= K
///   <path>                     graph6 file, one graph per line
std::vector<Graph> load_corpus(std::string_view spec);

/// One verifier run inside a census.
struct CensusInstance {
  std::size_t index = 0;
  std::string claim_id;
  std::vector<std::size_t> graphs;  // positions in the corpus
};

struct CensusSummary {
  /// claim id -> verdict name -> count
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::size_t violations = 0;
  std::size_t instances = 0;
};

/// Expands claims over the corpus: unary claims run on each graph, binary
/// claims on each ordered pair (including a graph with itself). Claims are
/// taken in registry order.
std::vector<CensusInstance> plan_census(std::size_t corpus_size,
                                        const std::vector<std::string>& claim_ids);

/// Runs every planned instance on `threads` workers. `sink` sees reports in
/// instance order, one call at a time. Instance i uses seed config.seed + i.
CensusSummary run_census(const std::vector<Graph>& corpus,
                         const std::vector<std::string>& claim_ids, const CheckConfig& config,
                         int threads,
                         const std::function<void(const CensusInstance&, const CheckReport&,
                                                  double seconds)>& sink);

}  // namespace symbreak
