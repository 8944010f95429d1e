#include "symbreak/distinguishing.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "symbreak/error.hpp"
#include "symbreak/products.hpp"

namespace symbreak {

std::string to_string(SolveMode mode) {
  return mode == SolveMode::exact ? "exact" : "certificate";
}

std::string to_string(LowerBoundBasis basis) {
  switch (basis) {
    case LowerBoundBasis::exhaustive: return "exhaustive";
    case LowerBoundBasis::nontrivial_group: return "nontrivial_group";
    case LowerBoundBasis::rigid: return "rigid";
  }
  return "?";
}

namespace {

void check_labels(const std::vector<int>& labels, int label_count, std::size_t expected,
                  const char* what) {
  if (labels.size() != expected)
    throw InvalidArgument(std::string(what) + " labeling has " + std::to_string(labels.size()) +
                          " entries, expected " + std::to_string(expected));
  if (label_count < 1) throw InvalidArgument("label count must be positive");
  for (int x : labels)
    if (x < 1 || x > label_count)
      throw InvalidArgument(std::string(what) + " label " + std::to_string(x) +
                            " outside 1.." + std::to_string(label_count));
}

// Vertex n + k stands for edge k and is adjacent to both of its endpoints.
Graph subdivision(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  const int n = g.order();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    edges.push_back({e.u, n + static_cast<int>(k)});
    edges.push_back({e.v, n + static_cast<int>(k)});
  }
  return Graph(n + static_cast<int>(g.size()), edges);
}

// Searches labelings of `positions` kernel vertices starting at `offset`.
// A colored kernel vertex set is rigid iff the labeling breaks every
// symmetry; unlabeled positions carry unique colors so that only symmetries
// living entirely on the labeled prefix are detected.
class LabelSearch {
 public:
  LabelSearch(const Graph& kernel, int offset, int positions, std::vector<int> classes,
              const Budget& budget)
      : kernel_(kernel),
        offset_(offset),
        positions_(positions),
        classes_(std::move(classes)),
        budget_(budget) {
    order_.resize(positions_);
    std::iota(order_.begin(), order_.end(), 0);
    if (!classes_.empty()) {
      // Larger twin classes first: they must take pairwise distinct labels.
      std::vector<int> class_size(positions_, 0);
      for (int c : classes_) ++class_size[c];
      std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
        if (class_size[classes_[a]] != class_size[classes_[b]])
          return class_size[classes_[a]] > class_size[classes_[b]];
        return classes_[a] < classes_[b];
      });
    }
  }

  bool has_symmetry(const std::vector<int>& labels, int d) const {
    std::vector<int> colors(kernel_.order(), 0);
    for (int k = 0; k < positions_; ++k)
      colors[offset_ + k] = labels[k] > 0 ? labels[k] : d + 1 + k;
    return find_nontrivial_automorphism(kernel_, colors, budget_).has_value();
  }

  std::optional<std::vector<int>> random_candidates(int d, std::uint64_t seed) const {
    std::mt19937_64 rng(seed ^ (0x5bd1e995ULL * static_cast<std::uint64_t>(d)));
    std::vector<std::vector<int>> members;
    if (!classes_.empty()) {
      members.resize(positions_);
      for (int k = 0; k < positions_; ++k) members[classes_[k]].push_back(k);
      for (const auto& m : members)
        if (static_cast<int>(m.size()) > d) return std::nullopt;
    }
    std::vector<int> labels(positions_);
    std::vector<int> pool(d);
    std::iota(pool.begin(), pool.end(), 1);
    std::uniform_int_distribution<int> pick(1, d);
    for (int attempt = 0; attempt < budget_.retries; ++attempt) {
      if (budget_.expired()) throw BudgetExceeded("labeling search: timeout", 0, 0);
      if (classes_.empty()) {
        for (int& x : labels) x = pick(rng);
      } else {
        for (const auto& m : members) {
          if (m.empty()) continue;
          std::shuffle(pool.begin(), pool.end(), rng);
          for (std::size_t i = 0; i < m.size(); ++i) labels[m[i]] = pool[i];
        }
      }
      if (!has_symmetry(labels, d)) return labels;
    }
    return std::nullopt;
  }

  /// Exhaustive decision for d labels, up to renaming of labels.
  std::optional<std::vector<int>> exhaustive(int d) {
    NodeCounter counter(budget_, "labeling search");
    counter_ = &counter;
    std::vector<int> labels(positions_, 0);
    bool found = dfs(0, 0, d, labels);
    counter_ = nullptr;
    if (!found) return std::nullopt;
    return labels;
  }

 private:
  bool dfs(int i, int max_used, int d, std::vector<int>& labels) {
    counter_->tick();
    if (i == positions_) return true;
    const int k = order_[i];
    for (int lab = 1; lab <= std::min(d, max_used + 1); ++lab) {
      if (!classes_.empty()) {
        bool clash = false;
        for (int j = 0; j < i && !clash; ++j)
          clash = classes_[order_[j]] == classes_[k] && labels[order_[j]] == lab;
        if (clash) continue;
      }
      labels[k] = lab;
      if (!has_symmetry(labels, d) && dfs(i + 1, std::max(max_used, lab), d, labels)) return true;
      labels[k] = 0;
    }
    return false;
  }

  const Graph& kernel_;
  int offset_;
  int positions_;
  std::vector<int> classes_;
  const Budget& budget_;
  std::vector<int> order_;
  NodeCounter* counter_ = nullptr;
};

DistinguishingResult solve(LabelSearch& search, int positions, bool rigid, SolveMode mode,
                           std::uint64_t seed) {
  DistinguishingResult result;
  result.mode = mode;
  if (rigid) {
    result.value = 1;
    result.witness.assign(positions, 1);
    result.lower_bound_basis = LowerBoundBasis::rigid;
    return result;
  }
  const auto finish = [&](int d, std::vector<int> witness) {
    result.value = d;
    result.witness = std::move(witness);
    result.lower_bound_basis =
        d == 2 ? LowerBoundBasis::nontrivial_group : LowerBoundBasis::exhaustive;
    return result;
  };
  // Giving every position its own label always distinguishes (edge callers
  // check faithfulness first), so both loops stop by d = positions.
  const int top = std::max(positions, 2);
  if (mode == SolveMode::exact) {
    for (int d = 2; d <= top; ++d) {
      auto witness = search.random_candidates(d, seed);
      if (!witness) witness = search.exhaustive(d);
      if (witness) return finish(d, std::move(*witness));
    }
    throw Error("labeling search exhausted every label count");
  }

  // Certificate mode: climb with random candidates only, then walk back down
  // with exhaustive searches while the budget lasts.
  int d = 2;
  std::optional<std::vector<int>> witness;
  for (; d <= top; ++d) {
    witness = search.random_candidates(d, seed);
    if (witness) break;
    if (d == top) {
      witness.emplace(positions);
      std::iota(witness->begin(), witness->end(), 1);
      break;
    }
  }
  finish(d, std::move(*witness));
  try {
    while (result.value > 2) {
      auto lower = search.exhaustive(result.value - 1);
      if (!lower) break;
      finish(result.value - 1, std::move(*lower));
    }
  } catch (const BudgetExceeded&) {
    result.exact = false;
  }
  return result;
}

}  // namespace

bool is_distinguishing(const Graph& g, const AutomorphismGroup& group,
                       const VertexLabeling& labeling) {
  check_labels(labeling.labels, labeling.label_count, g.order(), "vertex");
  for (const Permutation& p : group.elements) {
    if (p.is_identity()) continue;
    bool preserved = true;
    for (int v = 0; v < g.order() && preserved; ++v)
      preserved = labeling.labels[v] == labeling.labels[p[v]];
    if (preserved) return false;
  }
  return true;
}

bool is_distinguishing(const Graph& g, const AutomorphismGroup& group,
                       const EdgeLabeling& labeling) {
  check_labels(labeling.labels, labeling.label_count, g.size(), "edge");
  for (const Permutation& p : group.elements) {
    if (p.is_identity()) continue;
    const Permutation action = edge_action(g, p);
    bool preserved = true;
    for (int k = 0; k < action.degree() && preserved; ++k)
      preserved = labeling.labels[k] == labeling.labels[action[k]];
    if (preserved) return false;
  }
  return true;
}

bool is_distinguishing(const Graph& g, const VertexLabeling& labeling, const Budget& budget) {
  check_labels(labeling.labels, labeling.label_count, g.order(), "vertex");
  return !find_nontrivial_automorphism(g, labeling.labels, budget).has_value();
}

bool is_distinguishing(const Graph& g, const EdgeLabeling& labeling, const Budget& budget) {
  check_labels(labeling.labels, labeling.label_count, g.size(), "edge");
  const Graph sub = subdivision(g);
  std::vector<int> colors(sub.order(), 0);
  for (std::size_t k = 0; k < g.size(); ++k) colors[g.order() + k] = labeling.labels[k];
  return !find_nontrivial_automorphism(sub, colors, budget).has_value();
}

bool edge_action_is_faithful(const Graph& g, const Budget& budget) {
  const Graph sub = subdivision(g);
  std::vector<int> colors(sub.order(), 0);
  for (std::size_t k = 0; k < g.size(); ++k)
    colors[g.order() + k] = 1 + static_cast<int>(k);
  return !find_nontrivial_automorphism(sub, colors, budget).has_value();
}

DistinguishingResult distinguishing_number(const Graph& g, SolveMode mode, std::uint64_t seed,
                                           const Budget& budget) {
  const auto twins = twin_classes(g);
  std::vector<int> classes(g.order());
  for (std::size_t c = 0; c < twins.size(); ++c)
    for (int v : twins[c]) classes[v] = static_cast<int>(c);
  LabelSearch search(g, 0, g.order(), std::move(classes), budget);
  const bool rigid = !find_nontrivial_automorphism(g, {}, budget).has_value();
  return solve(search, g.order(), rigid, mode, seed);
}

DistinguishingResult distinguishing_index(const Graph& g, SolveMode mode, std::uint64_t seed,
                                          const Budget& budget) {
  if (g.size() == 0) throw UndefinedQuantity("distinguishing index undefined: graph has no edges");
  if (!edge_action_is_faithful(g, budget))
    throw UndefinedQuantity(
        "distinguishing index undefined: a non-identity automorphism fixes every edge");
  const Graph sub = subdivision(g);
  LabelSearch search(sub, g.order(), static_cast<int>(g.size()), {}, budget);
  const bool rigid = !find_nontrivial_automorphism(g, {}, budget).has_value();
  return solve(search, static_cast<int>(g.size()), rigid, mode, seed);
}

VertexLabeling label_by_left_factor(const Graph& g, const Graph& h, const VertexLabeling& c,
                                    const Budget& budget) {
  if (!is_distinguishing(g, c, budget))
    throw InvalidArgument("left factor labeling is not distinguishing");
  const ProductIndexMap map = index_map(g, h);
  VertexLabeling out;
  out.label_count = c.label_count * h.order();
  out.labels.resize(map.order());
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      out.labels[map.index(x, y)] = y * c.label_count + c.labels[x];
  return out;
}

VertexLabeling label_by_right_factor(const Graph& g, const Graph& h, const VertexLabeling& c,
                                     const Budget& budget) {
  if (!is_distinguishing(h, c, budget))
    throw InvalidArgument("right factor labeling is not distinguishing");
  const ProductIndexMap map = index_map(g, h);
  VertexLabeling out;
  out.label_count = g.order() * c.label_count;
  out.labels.resize(map.order());
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      out.labels[map.index(x, y)] = x * c.label_count + c.labels[y];
  return out;
}

bool automorphisms_preserved_by(const Graph& g, const Graph& sub, const Budget& budget) {
  if (g.order() != sub.order()) return false;
  const GroupSummary summary = automorphism_summary(g, {}, budget);
  return std::all_of(summary.generators.begin(), summary.generators.end(),
                     [&](const Permutation& p) { return is_automorphism(sub, p); });
}

EdgeLabeling lift_edge_labeling(const Graph& g, const Graph& sub, const EdgeLabeling& labeling,
                                int repeated_label, const Budget& budget) {
  if (!is_spanning_subgraph(sub, g))
    throw InvalidArgument("precondition failed: subgraph does not span the graph");
  if (!automorphisms_preserved_by(g, sub, budget))
    throw InvalidArgument(
        "precondition failed: some automorphism of the graph is not an automorphism of the "
        "spanning subgraph");
  if (!is_distinguishing(sub, labeling, budget))
    throw InvalidArgument("precondition failed: labeling does not distinguish the subgraph");
  if (repeated_label < 1 || repeated_label > labeling.label_count)
    throw InvalidArgument("precondition failed: repeated label outside the label range");
  EdgeLabeling out;
  out.label_count = labeling.label_count;
  out.labels.reserve(g.size());
  for (const Edge& e : g.edges()) {
    auto k = sub.edge_index(e.u, e.v);
    out.labels.push_back(k ? labeling.labels[*k] : repeated_label);
  }
  return out;
}

namespace {

bool traceable_dp(const Graph& g) {
  const int n = g.order();
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    while (e) {
      int v = __builtin_ctz(e);
      e &= e - 1;
      for (int w : g.neighbors(v))
        if (!(mask >> w & 1)) ends[mask | (1u << w)] |= 1u << w;
    }
  }
  return ends[full] != 0;
}

bool extend_path(const Graph& g, int v, int placed, std::vector<char>& used, NodeCounter& counter) {
  counter.tick();
  if (placed == g.order()) return true;
  for (int w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = 1;
    if (extend_path(g, w, placed + 1, used, counter)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool is_traceable(const Graph& g, const Budget& budget) {
  if (g.order() == 1) return true;
  if (!is_connected(g)) return false;
  if (g.order() <= 20) return traceable_dp(g);
  NodeCounter counter(budget, "Hamiltonian path search");
  std::vector<char> used(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    used[s] = 1;
    if (extend_path(g, s, 1, used, counter)) return true;
    used[s] = 0;
  }
  return false;
}

}  // namespace symbreak
