#include "symbreak/symmetry.hpp"

#include <algorithm>

#include "search.hpp"
#include "symbreak/error.hpp"

namespace symbreak {

bool AutomorphismGroup::contains(const Permutation& p) const {
  if (p.is_identity()) return p.degree() == degree;
  return std::binary_search(elements.begin() + 1, elements.end(), p);
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order())
    throw InvalidArgument("permutation degree " + std::to_string(p.degree()) +
                          " does not match graph order " + std::to_string(g.order()));
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

AutomorphismGroup automorphisms(const Graph& g, const Budget& budget) {
  NodeCounter counter(budget, "automorphism enumeration");
  detail::PairSearch search(g, {}, g, {}, counter);
  AutomorphismGroup group;
  group.degree = g.order();
  search.enumerate([&](const Permutation& p) {
    if (group.elements.size() >= budget.element_limit)
      throw BudgetExceeded("automorphism enumeration: element limit exceeded",
                           budget.element_limit, group.elements.size() + 1);
    group.elements.push_back(p);
    return true;
  });
  std::sort(group.elements.begin(), group.elements.end());
  // The identity is the smallest image array.
  return group;
}

GroupSummary automorphism_summary(const Graph& g, std::span<const int> colors,
                                  const Budget& budget) {
  NodeCounter counter(budget, "automorphism group order");
  detail::PairSearch search(g, colors, g, colors, counter);
  auto chain = search.stabilizer_chain();
  return {chain.order, std::move(chain.generators), std::move(chain.orbits)};
}

std::optional<Permutation> find_nontrivial_automorphism(const Graph& g,
                                                        std::span<const int> colors,
                                                        const Budget& budget) {
  NodeCounter counter(budget, "rigidity test");
  detail::PairSearch search(g, colors, g, colors, counter);
  return search.nontrivial();
}

bool is_rigid(const Graph& g, const Budget& budget) {
  return !find_nontrivial_automorphism(g, {}, budget).has_value();
}

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h, const Budget& budget) {
  NodeCounter counter(budget, "isomorphism search");
  detail::PairSearch search(g, {}, h, {}, counter);
  return search.first();
}

Permutation product_automorphism(const Permutation& a, const Permutation& b, bool swap,
                                 const ProductIndexMap& map) {
  if (a.degree() != map.n_left || b.degree() != map.n_right)
    throw InvalidArgument("factor permutation degrees do not match the product index map");
  if (swap && map.n_left != map.n_right)
    throw InvalidArgument("coordinate swap needs factors of equal order");
  std::vector<int> image(map.order());
  for (int x = 0; x < map.order(); ++x) {
    auto [g, h] = map.decode(x);
    image[x] = swap ? map.index(b[h], a[g]) : map.index(a[g], b[h]);
  }
  return Permutation(std::move(image));
}

bool aut_factorizes(const Graph& g, const Graph& h, const Budget& budget) {
  const AutomorphismGroup left = automorphisms(g, budget);
  const AutomorphismGroup right = automorphisms(h, budget);
  const AutomorphismGroup prod = automorphisms(conormal(g, h), budget);
  if (prod.order() != left.order() * right.order()) return false;
  const ProductIndexMap map = index_map(g, h);
  for (const Permutation& p : prod.elements) {
    // A product map sends (x, y) to (a(x), b(y)); read a off row y = 0 and b
    // off column x = 0, then confirm the whole permutation.
    std::vector<int> a_image(g.order());
    std::vector<int> b_image(h.order());
    bool consistent = true;
    for (int x = 0; x < g.order() && consistent; ++x) {
      auto [gx, hy] = map.decode(p[map.index(x, 0)]);
      a_image[x] = gx;
      consistent = hy == map.decode(p[map.index(0, 0)]).second;
    }
    for (int y = 0; y < h.order() && consistent; ++y) {
      auto [gx, hy] = map.decode(p[map.index(0, y)]);
      b_image[y] = hy;
      consistent = gx == a_image[0];
    }
    if (!consistent) return false;
    std::vector<int> sorted_a = a_image;
    std::vector<int> sorted_b = b_image;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
    sorted_b.erase(std::unique(sorted_b.begin(), sorted_b.end()), sorted_b.end());
    if (static_cast<int>(sorted_a.size()) != g.order() ||
        static_cast<int>(sorted_b.size()) != h.order())
      return false;
    Permutation a(std::move(a_image));
    Permutation b(std::move(b_image));
    if (!left.contains(a) || !right.contains(b)) return false;
    if (product_automorphism(a, b, false, map) != p) return false;
  }
  return true;
}

Permutation edge_action(const Graph& g, const Permutation& p) {
  if (!is_automorphism(g, p)) throw InvalidArgument("edge_action needs an automorphism");
  std::vector<int> image(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    image[k] = static_cast<int>(*g.edge_index(p[e.u], p[e.v]));
  }
  return Permutation(std::move(image));
}

}  // namespace symbreak
