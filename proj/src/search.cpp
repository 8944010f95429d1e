#include "search.hpp"

#include <algorithm>
#include <numeric>

#include "symbreak/error.hpp"

namespace symbreak {

void NodeCounter::tick() {
  ++used_;
  if (used_ > budget_.node_limit)
    throw BudgetExceeded(std::string(what_) + ": node budget exceeded", budget_.node_limit,
                         used_);
  if ((used_ & 255) == 0 && budget_.expired())
    throw BudgetExceeded(std::string(what_) + ": timeout", budget_.node_limit, used_);
}

namespace detail {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
  return mix(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

}  // namespace

CellPartition Refiner::initial(std::span<const int> colors) const {
  const int n = g_.order();
  CellPartition p;
  p.cell.assign(n, 0);
  if (colors.empty()) {
    p.count = 1;
    p.trace = combine(0, static_cast<std::uint64_t>(n));
    return p;
  }
  if (static_cast<int>(colors.size()) != n)
    throw InvalidArgument("color vector length does not match graph order");
  std::vector<int> values(colors.begin(), colors.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  p.count = static_cast<int>(values.size());
  std::vector<std::uint64_t> sizes(values.size(), 0);
  for (int v = 0; v < n; ++v) {
    p.cell[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), colors[v]) -
                                 values.begin());
    ++sizes[p.cell[v]];
  }
  std::uint64_t trace = combine(0, static_cast<std::uint64_t>(n));
  for (std::size_t c = 0; c < values.size(); ++c)
    trace = combine(combine(trace, static_cast<std::uint64_t>(values[c])), sizes[c]);
  p.trace = trace;
  return p;
}

void Refiner::refine(CellPartition& p) const {
  const int n = g_.order();
  std::vector<std::uint64_t> sig(n);
  std::vector<int> order(n);
  std::vector<int> next(n);
  while (p.count < n) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t h = 0;
      for (int w : g_.neighbors(v)) h += mix(static_cast<std::uint64_t>(p.cell[w]));
      sig[v] = h;
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (p.cell[a] != p.cell[b]) return p.cell[a] < p.cell[b];
      return sig[a] < sig[b];
    });
    int count = 0;
    std::uint64_t trace = p.trace;
    for (int k = 0; k < n; ++k) {
      int v = order[k];
      if (k > 0) {
        int u = order[k - 1];
        if (p.cell[u] != p.cell[v] || sig[u] != sig[v]) {
          trace = combine(trace, static_cast<std::uint64_t>(k));
          ++count;
        }
      }
      next[v] = count;
    }
    ++count;
    if (count == p.count) break;
    for (int k = 0; k < n; ++k) {
      int v = order[k];
      if (k == 0 || next[v] != next[order[k - 1]])
        trace = combine(combine(trace, static_cast<std::uint64_t>(next[v])), sig[v]);
    }
    p.cell.swap(next);
    p.count = count;
    p.trace = trace;
  }
}

CellPartition Refiner::individualize(const CellPartition& p, int v) const {
  CellPartition q;
  const int c = p.cell[v];
  q.cell.resize(p.cell.size());
  for (std::size_t x = 0; x < p.cell.size(); ++x) {
    int cx = p.cell[x];
    q.cell[x] = cx < c ? cx : cx + 1;
  }
  q.cell[v] = c;
  q.count = p.count + 1;
  q.trace = combine(p.trace, 0xabcdefULL + static_cast<std::uint64_t>(c));
  refine(q);
  return q;
}

PairSearch::PairSearch(const Graph& left, std::span<const int> left_colors, const Graph& right,
                       std::span<const int> right_colors, NodeCounter& counter)
    : left_(left), right_(right), counter_(counter) {
  if (left.order() != right.order() || left.size() != right.size()) return;
  if (left_colors.empty() != right_colors.empty()) return;

  CellPartition p = left_.initial(left_colors);
  left_.refine(p);
  right_root_ = right_.initial(right_colors);
  right_.refine(right_root_);
  if (p.trace != right_root_.trace || p.count != right_root_.count) return;
  compatible_ = true;

  const int n = left.order();
  while (p.count < n) {
    std::vector<int> size(p.count, 0);
    for (int v = 0; v < n; ++v) ++size[p.cell[v]];
    int target = static_cast<int>(
        std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
    int chosen = 0;
    while (p.cell[chosen] != target) ++chosen;
    CellPartition next = left_.individualize(p, chosen);
    path_.push_back(std::move(p));
    target_.push_back(target);
    chosen_.push_back(chosen);
    p = std::move(next);
  }
  path_.push_back(std::move(p));
}

std::optional<Permutation> PairSearch::leaf_map(const CellPartition& q) const {
  const CellPartition& leaf = path_.back();
  const int n = static_cast<int>(q.cell.size());
  std::vector<int> by_cell(n);
  for (int w = 0; w < n; ++w) by_cell[q.cell[w]] = w;
  std::vector<int> image(n);
  for (int v = 0; v < n; ++v) image[v] = by_cell[leaf.cell[v]];
  const Graph& a = left_.graph();
  const Graph& b = right_.graph();
  for (const Edge& e : a.edges())
    if (!b.adjacent(image[e.u], image[e.v])) return std::nullopt;
  return Permutation(std::move(image));
}

bool PairSearch::descend(int level, const CellPartition& q,
                         const std::function<bool(const Permutation&)>& visit) {
  if (level + 1 == static_cast<int>(path_.size())) {
    auto p = leaf_map(q);
    return p ? visit(*p) : true;
  }
  const CellPartition& expected = path_[level + 1];
  const int n = static_cast<int>(q.cell.size());
  for (int w = 0; w < n; ++w) {
    if (q.cell[w] != target_[level]) continue;
    counter_.tick();
    CellPartition r = right_.individualize(q, w);
    if (r.trace != expected.trace || r.count != expected.count) continue;
    if (!descend(level + 1, r, visit)) return false;
  }
  return true;
}

void PairSearch::enumerate(const std::function<bool(const Permutation&)>& visit) {
  if (!compatible_) return;
  descend(0, right_root_, visit);
}

std::optional<Permutation> PairSearch::first() {
  std::optional<Permutation> found;
  enumerate([&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

std::optional<Permutation> PairSearch::search_below(int level, int w) {
  counter_.tick();
  CellPartition r = right_.individualize(path_[level], w);
  const CellPartition& expected = path_[level + 1];
  if (r.trace != expected.trace || r.count != expected.count) return std::nullopt;
  std::optional<Permutation> found;
  descend(level + 1, r, [&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void unite_by(std::vector<int>& parent, const Permutation& p) {
  for (int v = 0; v < p.degree(); ++v) {
    int a = find_root(parent, v);
    int b = find_root(parent, p[v]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
}

}  // namespace

PairSearch::Chain PairSearch::stabilizer_chain() {
  const int n = left_.graph().order();
  Chain chain;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int level = static_cast<int>(chosen_.size()) - 1; level >= 0; --level) {
    const int v = chosen_[level];
    const CellPartition& p = path_[level];
    for (int w = 0; w < n; ++w) {
      if (w == v || p.cell[w] != target_[level]) continue;
      if (find_root(parent, w) == find_root(parent, v)) continue;
      if (auto sigma = search_below(level, w)) {
        unite_by(parent, *sigma);
        chain.generators.push_back(std::move(*sigma));
      }
    }
    std::uint64_t orbit = 0;
    const int root = find_root(parent, v);
    for (int w = 0; w < n; ++w)
      if (find_root(parent, w) == root) ++orbit;
    if (chain.order > UINT64_MAX / orbit)
      throw InvalidArgument("automorphism group order overflows 64 bits");
    chain.order *= orbit;
  }
  chain.orbits.resize(n);
  for (int v = 0; v < n; ++v) chain.orbits[v] = find_root(parent, v);
  std::reverse(chain.generators.begin(), chain.generators.end());
  return chain;
}

std::optional<Permutation> PairSearch::nontrivial() {
  const int n = left_.graph().order();
  for (int level = static_cast<int>(chosen_.size()) - 1; level >= 0; --level) {
    const CellPartition& p = path_[level];
    for (int w = 0; w < n; ++w) {
      if (w == chosen_[level] || p.cell[w] != target_[level]) continue;
      if (auto sigma = search_below(level, w)) return sigma;
    }
  }
  return std::nullopt;
}

}  // namespace detail
}  // namespace symbreak
