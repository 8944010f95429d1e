// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "symbreak/census.hpp"
#include "symbreak/checks.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/error.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/products.hpp"
#include "symbreak/symmetry.hpp"

using namespace symbreak;

namespace {

const Graph k(int n) { return make_family(Family::complete, n); }
const Graph p(int n) { return make_family(Family::path, n); }
const Graph c(int n) { return make_family(Family::cycle, n); }

// Collects mismatches for one criterion.
struct Outcome {
  std::vector<std::string> problems;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::vector<Graph> rigid_order6(std::size_t count) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_small_graphs(6, true, true))
    if (is_rigid(g) && out.size() < count) out.push_back(g);
  return out;
}

std::string g6(const Graph& g) { return to_graph6(g); }

Outcome family_values() {
  Outcome o;
  auto value = [&](const std::string& name, int got, int want) {
    o.expect(got == want, name + " = " + std::to_string(got) + ", want " + std::to_string(want));
  };
  for (int n = 3; n <= 8; ++n) {
    value("D(P" + std::to_string(n) + ")", distinguishing_number(p(n)).value, 2);
    value("D'(P" + std::to_string(n) + ")", distinguishing_index(p(n)).value, 2);
  }
  for (int n = 3; n <= 10; ++n) {
    const int want = n <= 5 ? 3 : 2;
    value("D(C" + std::to_string(n) + ")", distinguishing_number(c(n)).value, want);
    value("D'(C" + std::to_string(n) + ")", distinguishing_index(c(n)).value, want);
  }
  for (int n = 2; n <= 5; ++n) value("D(K" + std::to_string(n) + ")", distinguishing_number(k(n)).value, n);
  value("D'(K4)", distinguishing_index(k(4)).value, 3);
  return o;
}

Outcome product_identities() {
  Outcome o;
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m)
      o.expect(conormal(k(n), k(m)) == k(n * m),
               "K" + std::to_string(n) + " * K" + std::to_string(m) + " != K" + std::to_string(n * m));
  int count = 0;
  for (const Graph& g : load_corpus("gen:n=4")) {
    o.expect(conormal(g, Graph()) == g, g6(g) + " * K1 differs");
    ++count;
  }
  o.note = std::to_string(count) + " graphs with K1";
  return o;
}

Outcome census_zero_violations(const std::string& corpus_spec, const std::string& claim) {
  Outcome o;
  const auto corpus = load_corpus(corpus_spec);
  std::vector<std::string> samples;
  const CensusSummary s = run_census(
      corpus, {claim}, {}, 1, [&](const CensusInstance& inst, const CheckReport& r, double) {
        if (r.verdict != Verdict::violated) return;
        if (samples.size() < 3)
          samples.push_back(g6(corpus[inst.graphs[0]]) + "," + g6(corpus[inst.graphs[1]]) + " " +
                            r.witness.dump());
      });
  std::ostringstream counts;
  for (const auto& [verdict, n] : s.counts.at(claim)) counts << verdict << '=' << n << ' ';
  o.note = std::to_string(s.instances) + " pairs: " + counts.str();
  o.expect(s.violations == 0, std::to_string(s.violations) + " violations");
  for (const auto& x : samples) o.problems.push_back("e.g. " + x);
  return o;
}

Outcome group_theorems() {
  Outcome o;
  const CheckReport pc = check_group_theorems(p(4), c(5));
  o.expect(pc.verdict == Verdict::holds, "(P4, C5) verdict " + to_string(pc.verdict));
  o.expect(pc.computed["factorizes"] == true, "(P4, C5) does not factorize");
  o.expect(pc.computed["|Aut(G*H)|"] == 20, "(P4, C5) order " + pc.computed["|Aut(G*H)|"].dump());
  o.expect(aut_factorizes(p(4), c(5)), "(P4, C5) explicit factorization failed");

  const auto rigid = rigid_order6(2);
  if (rigid.size() < 2) {
    o.problems.push_back("fewer than two rigid order-6 graphs found");
    return o;
  }
  const CheckReport same = check_group_theorems(rigid[0], rigid[0]);
  o.expect(same.verdict == Verdict::holds, "rigid square verdict " + to_string(same.verdict));
  o.expect(automorphism_summary(conormal(rigid[0], rigid[0])).order == 2,
           "|Aut(G*G)| != 2 for rigid " + g6(rigid[0]));
  const CheckReport diff = check_group_theorems(rigid[0], rigid[1]);
  o.expect(diff.verdict == Verdict::holds, "rigid pair verdict " + to_string(diff.verdict));
  o.expect(is_rigid(conormal(rigid[0], rigid[1])),
           g6(rigid[0]) + " * " + g6(rigid[1]) + " is not rigid");
  o.note = "rigid graphs " + g6(rigid[0]) + ", " + g6(rigid[1]);
  return o;
}

Outcome cartesian_equality() {
  Outcome o;
  const std::vector<std::pair<Graph, Graph>> pairs = {
      {p(4), c(5)}, {p(4), c(6)}, {p(5), c(6)}, {p(3), p(4)}};
  std::vector<std::string> unmet;
  for (const auto& [g, h] : pairs) {
    const std::string name = g6(g) + "," + g6(h);
    const int dstar = distinguishing_number(conormal(g, h)).value;
    const int dbox = distinguishing_number(cartesian(g, h)).value;
    o.expect(dstar == 2 && dbox == 2,
             name + ": D(*) = " + std::to_string(dstar) + ", D(box) = " + std::to_string(dbox));
    const CheckReport r = check_cartesian_equality(g, h);
    if (r.verdict == Verdict::skipped_hypotheses)
      unmet.push_back(name + " (" + r.reason + ")");
    else
      o.expect(r.verdict == Verdict::holds, name + " verdict " + to_string(r.verdict));
  }
  o.note = unmet.empty() ? "hypotheses met for all pairs"
                         : "values only, hypotheses unmet for " + unmet.front();
  return o;
}

Outcome power_theorems() {
  Outcome o;
  CheckConfig cfg;
  cfg.mode = SolveMode::certificate;
  auto certify = [&](const Graph& g, int kk, const std::string& name) {
    const Graph power = conormal_power(g, kk);
    const auto d = distinguishing_number(power, SolveMode::certificate, 0);
    const auto dp = distinguishing_index(power, SolveMode::certificate, 0);
    o.expect(!is_rigid(power), name + " is rigid");
    o.expect(d.value == 2 && is_distinguishing(power, VertexLabeling{d.witness, 2}),
             "D(" + name + ") = " + std::to_string(d.value));
    o.expect(dp.value == 2 && is_distinguishing(power, EdgeLabeling{dp.witness, 2}),
             "D'(" + name + ") = " + std::to_string(dp.value));
    const CheckReport r = check_power_theorems(g, kk, cfg);
    o.expect(r.verdict == Verdict::holds, name + " verdict " + to_string(r.verdict));
    return std::to_string(power.order()) + " vertices";
  };
  o.note = "P4^3: " + certify(p(4), 3, "P4^3");
  const auto rigid = rigid_order6(1);
  o.note += ", G^2: " + certify(rigid.at(0), 2, g6(rigid[0]) + "^2");
  return o;
}

Outcome index_theorems() {
  Outcome o;
  o.expect(distinguishing_index(conormal(k(2), k(2))).value == 3, "D'(K2 * K2) != 3");
  int count = 0;
  for (const Graph& g : load_corpus("gen:n=4,connected")) {
    if (g.order() < 2) continue;
    for (int m : {2, 3}) {
      if (m == 2 && g.order() == 2) continue;
      const int v = distinguishing_index(conormal(g, k(m))).value;
      o.expect(v == 2, "D'(" + g6(g) + " * K" + std::to_string(m) + ") = " + std::to_string(v));
      ++count;
    }
  }
  const std::vector<std::pair<Graph, Graph>> families = {
      {p(2), p(3)}, {p(3), p(3)}, {p(3), p(4)}, {p(4), p(4)}, {c(3), c(3)},
      {c(3), c(4)}, {c(4), c(4)}, {p(2), c(3)}, {p(3), c(4)}, {p(4), c(4)}};
  for (const auto& [g, h] : families) {
    const int v = distinguishing_index(conormal(g, h)).value;
    o.expect(v == 2, "D'(" + g6(g) + " * " + g6(h) + ") = " + std::to_string(v));
    const CheckReport r = check_index_theorems(g, h);
    o.expect(r.verdict == Verdict::holds, g6(g) + "," + g6(h) + " verdict " + to_string(r.verdict));
  }
  o.note = std::to_string(count) + " complete-factor products";
  return o;
}

Outcome spanning_lemmas() {
  Outcome o;
  const Graph g = conormal(p(4), c(5));
  const Graph h = cartesian(p(4), c(5));
  const CheckReport r = check_spanning_lemmas(g, h);
  o.expect(r.verdict == Verdict::holds, "lift verdict " + to_string(r.verdict));
  o.expect(r.computed.value("Aut(G) within Aut(H)", false), "subgroup hypothesis not verified");
  o.expect(r.computed.value("lifted labeling distinguishes", false), "lifted labeling fails");
  if (r.computed.contains("D'(G)"))
    o.expect(r.computed["D'(G)"]["value"] <= r.computed["D'(H)"]["value"], "D'(*) > D'(box)");
  const CheckReport cp = check_spanning_lemmas(c(5), p(5));
  o.expect(cp.verdict == Verdict::holds, "(C5, P5) verdict " + to_string(cp.verdict));
  o.expect(cp.computed["D'(G)"]["value"] == 3 && cp.computed["D'(H)"]["value"] == 2,
           "(C5, P5) values " + cp.computed.dump());
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto same_group = [&](const Graph& g) {
    std::vector<std::vector<int>> got;
    for (const Permutation& q : automorphisms(g).elements) got.push_back(q.image());
    std::sort(got.begin(), got.end());
    o.expect(got == oracle::automorphisms(g), "automorphisms differ on " + g6(g));
  };
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(1, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 500; ++i) same_group(oracle::random_graph(order(rng), density(rng), rng));
  int small = 0;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      ++small;
      same_group(g);
      o.expect(distinguishing_number(g).value == oracle::distinguishing_number(g),
               "D differs on " + g6(g));
      const auto dp = oracle::distinguishing_index(g);
      if (dp) {
        o.expect(distinguishing_index(g).value == *dp, "D' differs on " + g6(g));
      } else {
        bool undefined = false;
        try {
          distinguishing_index(g);
        } catch (const UndefinedQuantity&) {
          undefined = true;
        }
        o.expect(undefined, "D' should be undefined on " + g6(g));
      }
    }
  o.note = "500 random + " + std::to_string(small) + " labeled graphs";
  return o;
}

Outcome determinism() {
  Outcome o;
  auto census = [](const std::vector<std::string>& extra) {
    std::vector<std::string> args{"census", "--corpus", "gen:n=3", "--claim", "all",
                                  "--seed", "42", "--output", "records"};
    args.insert(args.end(), extra.begin(), extra.end());
    std::ostringstream out, err;
    std::istringstream in;
    cli::run(args, out, err, in);
    static const std::regex timing(R"(,"timing":\{[^}]*\})");
    return std::regex_replace(out.str(), timing, "");
  };
  const std::string a = census({}), b = census({}), threaded = census({"--threads", "3"});
  o.expect(!a.empty(), "census produced no records");
  o.expect(a == b, "repeated runs differ");
  o.expect(a == threaded, "threaded run differs");
  o.note = std::to_string(std::count(a.begin(), a.end(), '\n')) + " records";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"family value table", family_values},
      {"product identities", product_identities},
      {"bound chain over connected pairs of order <= 4",
       [] { return census_zero_violations("gen:n=4,connected", "bound-chain"); }},
      {"neighborhood and dominating-vertex lemmas over pairs of order <= 4",
       [] { return census_zero_violations("gen:n=4", "product-lemmas"); }},
      {"automorphism group theorems", group_theorems},
      {"co-normal and Cartesian distinguishing numbers agree", cartesian_equality},
      {"co-normal powers in certificate mode", power_theorems},
      {"distinguishing index of products", index_theorems},
      {"spanning subgraph lemmas", spanning_lemmas},
      {"oracle equivalence", oracle_equivalence},
      {"census determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.problems.empty();
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.note.empty()) std::cout << " [" << o.note << "]";
    std::cout << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const std::string& p : o.problems) std::cout << "    " << p << '\n';
    std::cout.unsetf(std::ios::fixed);
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
