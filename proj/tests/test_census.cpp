#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "symbreak/census.hpp"
#include "symbreak/error.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/symmetry.hpp"

using namespace symbreak;

TEST_SUITE("census") {
  TEST_CASE("enumeration counts") {
    CHECK(enumerate_small_graphs(3, false, false).size() == 8);
    CHECK(enumerate_small_graphs(1, false, false) == std::vector<Graph>{Graph()});
    CHECK(enumerate_small_graphs(4, false, false).size() == 64);
    CHECK(enumerate_small_graphs(4, true, false).size() == 38);
    CHECK(enumerate_small_graphs(4, true, true).size() == 6);
    CHECK(enumerate_small_graphs(4, false, true).size() == 11);
    CHECK(enumerate_small_graphs(5, true, true).size() == 21);
    CHECK(enumerate_small_graphs(6, true, true).size() == 112);
    CHECK_THROWS_AS(enumerate_small_graphs(6, false, false), InvalidArgument);
    CHECK_THROWS_AS(enumerate_small_graphs(0, false, false), InvalidArgument);
  }

  TEST_CASE("isomorphism dedup matches a brute-force canonical form") {
    // Canonical form: the lexicographically smallest relabeled edge list.
    auto canon = [](const Graph& g) {
      std::vector<int> q(g.order());
      std::iota(q.begin(), q.end(), 0);
      std::vector<Edge> best;
      bool first = true;
      do {
        const auto edges = oracle::relabel(g, q).edges();
        if (first || edges < best) best = edges;
        first = false;
      } while (std::next_permutation(q.begin(), q.end()));
      return best;
    };
    for (int n = 1; n <= 5; ++n) {
      std::set<std::vector<Edge>> classes;
      for (const Graph& g : oracle::all_graphs(n)) classes.insert(canon(g));
      const auto reps = enumerate_small_graphs(n, false, true);
      CHECK(reps.size() == classes.size());
      std::set<std::vector<Edge>> seen;
      for (const Graph& g : reps) seen.insert(canon(g));
      CHECK(seen.size() == reps.size());
    }
  }

  TEST_CASE("corpus specifications") {
    CHECK(load_corpus("gen:n=3").size() == 1 + 2 + 8);
    CHECK(load_corpus("gen:n=4,connected").size() == 1 + 1 + 4 + 38);
    CHECK(load_corpus("gen:n=4,connected,iso").size() == 1 + 1 + 2 + 6);
    // P1..P7, C3..C7, K4..K7.
    CHECK(load_corpus("families:n=7").size() == 7 + 5 + 4);
    CHECK_THROWS_AS(load_corpus("gen:n=x"), InvalidArgument);
    CHECK_THROWS_AS(load_corpus("gen:connected"), InvalidArgument);
    CHECK_THROWS_AS(load_corpus("gen:n=3,bogus"), InvalidArgument);
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.g6"), ParseError);

    const std::string path = "census_corpus_test.g6";
    {
      std::ofstream out(path);
      out << "# two graphs\nC~\nBg\n";
    }
    const auto graphs = load_corpus(path);
    std::remove(path.c_str());
    REQUIRE(graphs.size() == 2);
    CHECK(to_graph6(graphs[0]) == "C~");
  }

  TEST_CASE("plan expands unary and binary claims in registry order") {
    const auto plan = plan_census(3, {"bound-chain", "family-values"});
    REQUIRE(plan.size() == 3 + 9);
    CHECK(plan[0].claim_id == "family-values");
    CHECK(plan[3].claim_id == "bound-chain");
    CHECK(plan[4].graphs == std::vector<std::size_t>{0, 1});
    for (std::size_t i = 0; i < plan.size(); ++i) CHECK(plan[i].index == i);
    CHECK_THROWS_AS(plan_census(3, {"nope"}), InvalidArgument);
  }

  TEST_CASE("runs are ordered and thread-count independent") {
    const auto corpus = load_corpus("gen:n=3");
    std::vector<std::string> claims;
    for (const auto& c : claim_registry()) claims.push_back(c.id);
    auto collect = [&](int threads) {
      std::vector<std::string> lines;
      const CensusSummary s = run_census(corpus, claims, {}, threads,
                                         [&](const CensusInstance& inst, const CheckReport& r,
                                             double) {
                                           CHECK(inst.index == lines.size());
                                           lines.push_back(to_json(r).dump());
                                         });
      CHECK(s.instances == lines.size());
      CHECK(s.violations == 0);
      return lines;
    };
    CHECK(collect(1) == collect(3));
  }
}
