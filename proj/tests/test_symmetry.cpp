#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "symbreak/error.hpp"
#include "symbreak/symmetry.hpp"

using namespace symbreak;

namespace {

const Graph k(int n) { return make_family(Family::complete, n); }
const Graph p(int n) { return make_family(Family::path, n); }
const Graph c(int n) { return make_family(Family::cycle, n); }

// Seven edges on six vertices with only the identity automorphism.
const Graph kRigid6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {1, 4}});

std::vector<std::vector<int>> images(const AutomorphismGroup& group) {
  std::vector<std::vector<int>> out;
  for (const Permutation& q : group.elements) out.push_back(q.image());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("permutations") {
    CHECK_THROWS_AS(Permutation({0, 0}), InvalidArgument);
    const Permutation a({1, 2, 0}), b({0, 2, 1});
    CHECK((a * b)[1] == a[b[1]]);
    CHECK((a * a.inverse()).is_identity());
    CHECK(to_string(a) == "[1,2,0]");
  }

  TEST_CASE("is_automorphism") {
    CHECK(is_automorphism(p(4), Permutation::identity(4)));
    CHECK(is_automorphism(p(4), Permutation({3, 2, 1, 0})));
    CHECK_FALSE(is_automorphism(p(4), Permutation({1, 0, 2, 3})));
    CHECK_THROWS_AS(is_automorphism(p(4), Permutation::identity(3)), InvalidArgument);
  }

  TEST_CASE("group orders") {
    CHECK(automorphisms(k(3)).order() == 6);
    CHECK(automorphisms(p(4)).order() == 2);
    CHECK(automorphisms(c(4)).order() == 8);
    CHECK(automorphisms(Graph()).order() == 1);
    CHECK(automorphism_summary(k(16)).order == 20922789888000ULL);
    CHECK(automorphism_summary(conormal(p(4), c(5))).order == 20);
    CHECK(automorphism_summary(conormal(kRigid6, kRigid6)).order == 2);
  }

  TEST_CASE("rigidity") {
    CHECK_FALSE(is_rigid(p(4)));
    CHECK(is_rigid(Graph()));
    CHECK(is_rigid(kRigid6));
    CHECK(oracle::automorphisms(kRigid6).size() == 1);
  }

  TEST_CASE("naive all-permutations oracle on every labeled graph of order <= 5") {
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : oracle::all_graphs(n)) {
        const auto expected = oracle::automorphisms(g);
        CHECK(images(automorphisms(g)) == expected);
        CHECK(automorphism_summary(g).order == expected.size());
      }
  }

  TEST_CASE("random graphs of order 6 and 7") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_graph(6 + trial % 2, 0.2 + 0.1 * (trial % 6), rng);
      CHECK(images(automorphisms(g)) == oracle::automorphisms(g));
    }
  }

  TEST_CASE("closure and orbits") {
    const Graph g = conormal(p(3), c(4));
    const AutomorphismGroup group = automorphisms(g);
    CHECK(group.elements.front().is_identity());
    for (const Permutation& a : group.elements) {
      CHECK(group.contains(a.inverse()));
      for (const Permutation& b : group.elements) CHECK(group.contains(a * b));
    }
    const GroupSummary summary = automorphism_summary(g);
    CHECK(summary.order == group.order());
    for (int v = 0; v < g.order(); ++v) {
      std::set<int> orbit;
      for (const Permutation& a : group.elements) orbit.insert(a[v]);
      CHECK(summary.orbits[v] == *orbit.begin());
    }
  }

  TEST_CASE("colored automorphisms") {
    const std::vector<int> colors{1, 1, 1, 2};
    const GroupSummary s = automorphism_summary(c(4), colors);
    CHECK(s.order == 2);  // the reflection through vertex 3
    CHECK(find_nontrivial_automorphism(p(4), std::vector<int>{1, 2, 2, 2}) == std::nullopt);
    CHECK_THROWS_AS(automorphism_summary(c(4), std::vector<int>{1, 2}), InvalidArgument);
  }

  TEST_CASE("budgets") {
    Budget tight;
    tight.element_limit = 100;
    CHECK_THROWS_AS(automorphisms(k(6), tight), BudgetExceeded);
    Budget few;
    few.node_limit = 2;
    CHECK_THROWS_AS(automorphism_summary(c(8), {}, few), BudgetExceeded);
  }

  TEST_CASE("isomorphism") {
    CHECK(are_isomorphic(c(3), k(3)));
    CHECK_FALSE(are_isomorphic(p(4), make_complete_bipartite(1, 3)));
    CHECK(are_isomorphic(c(5), complement(c(5))));
    CHECK_FALSE(are_isomorphic(p(3), p(4)));
    const Graph h = oracle::relabel(kRigid6, {4, 2, 0, 5, 1, 3});
    const auto iso = find_isomorphism(kRigid6, h);
    REQUIRE(iso.has_value());
    for (const Edge& e : kRigid6.edges()) CHECK(h.adjacent((*iso)[e.u], (*iso)[e.v]));
  }

  TEST_CASE("product automorphisms") {
    const Graph p4 = p(4), p3 = p(3);
    const ProductIndexMap map = index_map(p4, p3);
    CHECK(product_automorphism(Permutation::identity(4), Permutation::identity(3), false, map)
              .is_identity());
    CHECK(is_automorphism(conormal(p4, p3),
                          product_automorphism(Permutation({3, 2, 1, 0}),
                                               Permutation::identity(3), false, map)));
    const ProductIndexMap square = index_map(p3, p3);
    const Permutation swap = product_automorphism(Permutation::identity(3),
                                                  Permutation::identity(3), true, square);
    CHECK(swap[square.index(0, 2)] == square.index(2, 0));
    CHECK(is_automorphism(conormal(p3, p3), swap));
  }

  TEST_CASE("factorization") {
    CHECK(aut_factorizes(p(4), c(5)));
    CHECK_FALSE(aut_factorizes(make_complete_bipartite(1, 3), p(4)));
    CHECK_FALSE(aut_factorizes(k(2), k(2)));
  }

  TEST_CASE("edge action") {
    CHECK(edge_action(p(4), Permutation::identity(4)).is_identity());
    CHECK(edge_action(p(3), Permutation({2, 1, 0})) == Permutation({1, 0}));
    CHECK(edge_action(k(2), Permutation({1, 0})).is_identity());
    CHECK_THROWS_AS(edge_action(p(3), Permutation({1, 0, 2})), InvalidArgument);
  }
}
