#include "symbreak/checks.hpp"

#include <algorithm>

#include "symbreak/error.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/products.hpp"
#include "symbreak/symmetry.hpp"

namespace symbreak {

using nlohmann::json;

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::skipped_hypotheses: return "skipped-hypotheses";
    case Verdict::skipped_budget: return "skipped-budget";
  }
  return "?";
}

bool CheckReport::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.met; });
}

json to_json(const CheckReport& report) {
  json hyps = json::array();
  for (const Hypothesis& h : report.hypotheses) hyps.push_back({{"name", h.name}, {"met", h.met}});
  json out = {{"claim", report.claim_id},
              {"verdict", to_string(report.verdict)},
              {"hypotheses_met", report.hypotheses_met()},
              {"hypotheses", hyps},
              {"computed", report.computed}};
  if (!report.witness.is_null()) out["witness"] = report.witness;
  if (!report.reason.empty()) out["reason"] = report.reason;
  return out;
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = {
      {"family-values", 1,
       "paths P_n (n>=3) have D = D' = 2; cycles have D = D' = 3 for n = 3,4,5 and 2 from n = 6; "
       "D(K_n) = n and D'(K4) = 3"},
      {"complement-invariance", 1, "a graph and its complement share D and the group order"},
      {"product-lemmas", 2,
       "equal open neighborhoods in G*H arise exactly from the three factor cases; (g,h) "
       "dominates G*H iff g dominates G and h dominates H"},
      {"group-theorems", 2,
       "product maps are automorphisms of G*H; Aut factorizes iff both factors are free of false "
       "twins and dominating vertices; rigid isomorphic factors give order 2; G*H rigid iff the "
       "factors are rigid and non-isomorphic; rigid G, non-rigid H give |Aut(H)| iff no "
       "dominating vertex in G and no false twins in H"},
      {"bound-chain", 2,
       "max{D(G box H), D(G), D(H)} <= D(G*H) <= min{D(G)|V(H)|, |V(G)|D(H)}, with both block "
       "labelings distinguishing"},
      {"cartesian-equality", 2,
       "D(G*H) = D(G box H) for connected non-isomorphic non-rigid factors without false twins or "
       "dominating vertices"},
      {"power-theorems", 1,
       "the k-th co-normal power of a connected graph without false twins or dominating vertices "
       "has D = D' = 2 for k >= 3 (k >= 2 when the graph is rigid)"},
      {"traceable-index", 1, "traceable graphs of order >= 7 have D' <= 2"},
      {"spanning-lemmas", 2,
       "D'(G) <= D'(H) + 1 when H spans or almost spans G; D'(G) <= D'(H) when H spans G and "
       "Aut(G) is contained in Aut(H)"},
      {"index-theorems", 2,
       "D'(G*H) <= D'(G box H) + 1, and <= D'(G box H) under the twin/dominating hypotheses; "
       "D'(G*K_m) = 2 except D'(K2*K2) = 3; paths and cycles give 2 except P2*P2"},
  };
  return registry;
}

const ClaimInfo* find_claim(std::string_view id) {
  for (const ClaimInfo& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

void require(CheckReport& r, std::string name, bool met) {
  r.hypotheses.push_back({std::move(name), met});
}

// Marks the report skipped when a hypothesis failed; returns true if so.
bool skip_unmet(CheckReport& r) {
  if (r.hypotheses_met()) return false;
  r.verdict = Verdict::skipped_hypotheses;
  std::string failed;
  for (const Hypothesis& h : r.hypotheses) {
    if (h.met) continue;
    if (!failed.empty()) failed += ", ";
    failed += h.name;
  }
  r.reason = "unmet: " + failed;
  return true;
}

void violate(CheckReport& r, const std::string& what, json detail) {
  if (r.verdict != Verdict::violated) {
    r.verdict = Verdict::violated;
    r.witness = json::array();
  }
  r.witness.push_back({{"failed", what}, {"detail", std::move(detail)}});
}

void require_factor(CheckReport& r, const char* name, const Graph& g, bool connected) {
  require(r, std::string(name) + " has order >= 2", g.order() >= 2);
  if (connected) require(r, std::string(name) + " connected", is_connected(g));
}

bool twin_and_dominating_free(const Graph& g) {
  return !has_false_twins(g) && dominating_vertices(g).empty();
}

bool non_isomorphic(const Graph& g, const Graph& h, const Budget& budget) {
  // Different orders settle it without a search.
  return g.order() != h.order() || !are_isomorphic(g, h, budget);
}

// Runs `body` and converts budget and definedness failures into verdicts.
template <typename Body>
CheckReport guarded(CheckReport r, Body&& body) {
  try {
    body(r);
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::skipped_budget;
    r.reason = e.what();
  } catch (const UndefinedQuantity& e) {
    r.verdict = Verdict::skipped_hypotheses;
    r.reason = e.what();
  }
  return r;
}

json result_json(const DistinguishingResult& d) {
  return {{"value", d.value}, {"exact", d.exact}, {"witness", d.witness}};
}

}  // namespace

CheckReport check_bound_chain(const Graph& g, const Graph& h, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "bound-chain";
  require_factor(r, "G", g, true);
  require_factor(r, "H", h, true);
  if (skip_unmet(r)) return r;
  return guarded(std::move(r), [&](CheckReport& r) {
    const auto& b = config.budget;
    const auto dg = distinguishing_number(g, SolveMode::exact, config.seed, b);
    const auto dh = distinguishing_number(h, SolveMode::exact, config.seed, b);
    const Graph box = cartesian(g, h);
    const Graph star = conormal(g, h);
    const auto dbox = distinguishing_number(box, SolveMode::exact, config.seed, b);
    const auto dstar = distinguishing_number(star, SolveMode::exact, config.seed, b);
    const int lower = std::max({dbox.value, dg.value, dh.value});
    const int upper = std::min(dg.value * h.order(), g.order() * dh.value);
    r.computed = {{"D(G)", dg.value},       {"D(H)", dh.value},       {"D(G box H)", dbox.value},
                  {"D(G*H)", dstar.value},  {"lower", lower},         {"upper", upper},
                  {"witness(G*H)", dstar.witness}};
    if (dstar.value < lower) {
      nlohmann::json exceeded = nlohmann::json::array();
      if (dbox.value > dstar.value) exceeded.push_back("D(G box H)");
      if (dg.value > dstar.value) exceeded.push_back("D(G)");
      if (dh.value > dstar.value) exceeded.push_back("D(H)");
      violate(r, "lower bound",
              {{"D(G*H)", dstar.value}, {"lower", lower}, {"exceeding terms", exceeded}});
    }
    if (dstar.value > upper)
      violate(r, "upper bound", {{"D(G*H)", dstar.value}, {"upper", upper}});

    const VertexLabeling by_left = label_by_left_factor(g, h, {dg.witness, dg.value}, b);
    const VertexLabeling by_right = label_by_right_factor(g, h, {dh.witness, dh.value}, b);
    const bool left_ok = is_distinguishing(star, by_left, b);
    const bool right_ok = is_distinguishing(star, by_right, b);
    r.computed["left block labeling distinguishes"] = left_ok;
    r.computed["right block labeling distinguishes"] = right_ok;
    if (!left_ok) violate(r, "left block labeling", {{"labels", by_left.labels}});
    if (!right_ok) violate(r, "right block labeling", {{"labels", by_right.labels}});
  });
}

CheckReport check_cartesian_equality(const Graph& g, const Graph& h, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "cartesian-equality";
  require_factor(r, "G", g, true);
  require_factor(r, "H", h, true);
  if (skip_unmet(r)) return r;
  return guarded(std::move(r), [&](CheckReport& r) {
    const auto& b = config.budget;
    require(r, "G, H non-isomorphic", non_isomorphic(g, h, b));
    require(r, "G non-rigid", !is_rigid(g, b));
    require(r, "H non-rigid", !is_rigid(h, b));
    require(r, "G without false twins", !has_false_twins(g));
    require(r, "H without false twins", !has_false_twins(h));
    require(r, "G without dominating vertices", dominating_vertices(g).empty());
    require(r, "H without dominating vertices", dominating_vertices(h).empty());
    if (skip_unmet(r)) return;
    const auto dstar = distinguishing_number(conormal(g, h), SolveMode::exact, config.seed, b);
    const auto dbox = distinguishing_number(cartesian(g, h), SolveMode::exact, config.seed, b);
    r.computed = {{"D(G*H)", dstar.value}, {"D(G box H)", dbox.value}};
    if (dstar.value != dbox.value)
      violate(r, "equality", {{"D(G*H)", dstar.value}, {"D(G box H)", dbox.value}});
  });
}

CheckReport check_product_lemmas(const Graph& g, const Graph& h, const CheckConfig&) {
  CheckReport r;
  r.claim_id = "product-lemmas";
  const Graph star = conormal(g, h);
  const ProductIndexMap map = index_map(g, h);
  int equal_pairs = 0;
  int dominating = 0;
  for (int x = 0; x < map.order(); ++x) {
    auto [v1, u1] = map.decode(x);
    for (int y = x + 1; y < map.order(); ++y) {
      auto [v2, u2] = map.decode(y);
      const bool lhs = star.neighbors(x) == star.neighbors(y);
      const bool same_nbhd_g = g.neighbors(v1) == g.neighbors(v2);
      const bool same_nbhd_h = h.neighbors(u1) == h.neighbors(u2);
      const bool rhs = (v1 == v2 && same_nbhd_h) || (u1 == u2 && same_nbhd_g) ||
                       (same_nbhd_g && same_nbhd_h);
      equal_pairs += lhs;
      if (lhs != rhs)
        violate(r, "equal neighborhoods", {{"pair", {x, y}}, {"product", lhs}, {"factors", rhs}});
    }
    const bool dom_product = star.degree(x) == star.order() - 1;
    const bool dom_factors =
        g.degree(v1) == g.order() - 1 && h.degree(u1) == h.order() - 1;
    dominating += dom_product;
    if (dom_product != dom_factors)
      violate(r, "dominating vertex", {{"vertex", x}, {"product", dom_product},
                                      {"factors", dom_factors}});
  }
  r.computed = {{"equal-neighborhood pairs", equal_pairs}, {"dominating vertices", dominating}};
  return r;
}

CheckReport check_group_theorems(const Graph& g, const Graph& h, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "group-theorems";
  require_factor(r, "G", g, false);
  require_factor(r, "H", h, false);
  if (skip_unmet(r)) return r;
  return guarded(std::move(r), [&](CheckReport& r) {
    const auto& b = config.budget;
    const Graph star = conormal(g, h);
    const ProductIndexMap map = index_map(g, h);
    const GroupSummary ag = automorphism_summary(g, {}, b);
    const GroupSummary ah = automorphism_summary(h, {}, b);
    const GroupSummary ap = automorphism_summary(star, {}, b);
    const std::optional<Permutation> iso =
        g.order() == h.order() ? find_isomorphism(g, h, b) : std::nullopt;
    const bool rigid_g = ag.order == 1;
    const bool rigid_h = ah.order == 1;
    json applied = json::array();

    // Product maps from generators; products of automorphisms are
    // automorphisms, so generators cover the whole direct product.
    applied.push_back("product maps");
    for (const Permutation& a : ag.generators) {
      Permutation lam = product_automorphism(a, Permutation::identity(h.order()), false, map);
      if (!is_automorphism(star, lam)) violate(r, "product map", {{"map", lam.image()}});
    }
    for (const Permutation& bgen : ah.generators) {
      Permutation lam = product_automorphism(Permutation::identity(g.order()), bgen, false, map);
      if (!is_automorphism(star, lam)) violate(r, "product map", {{"map", lam.image()}});
    }
    if (iso) {
      applied.push_back("coordinate swap");
      Permutation lam = product_automorphism(*iso, iso->inverse(), true, map);
      if (!is_automorphism(star, lam)) violate(r, "coordinate swap", {{"map", lam.image()}});
    }

    // Rigidity of the product: an iff over every pair.
    applied.push_back("product rigidity");
    const bool rigid_condition = !iso && rigid_g && rigid_h;
    if (rigid_condition != (ap.order == 1))
      violate(r, "product rigidity",
              {{"condition", rigid_condition}, {"|Aut(G*H)|", ap.order}});

    if (iso && rigid_g && rigid_h) {
      applied.push_back("rigid isomorphic factors");
      if (ap.order != 2) violate(r, "rigid isomorphic factors", {{"|Aut(G*H)|", ap.order}});
    }

    const bool factorizes =
        ag.order <= UINT64_MAX / ah.order && ap.order == ag.order * ah.order;
    if (!iso && !rigid_g && !rigid_h) {
      applied.push_back("factorization");
      const bool condition = twin_and_dominating_free(g) && twin_and_dominating_free(h);
      if (condition != factorizes)
        violate(r, "factorization", {{"condition", condition}, {"factorizes", factorizes}});
    }

    if (rigid_g != rigid_h) {
      applied.push_back("rigid factor");
      const Graph& rigid = rigid_g ? g : h;
      const Graph& other = rigid_g ? h : g;
      const std::uint64_t other_order = rigid_g ? ah.order : ag.order;
      const bool condition = dominating_vertices(rigid).empty() && !has_false_twins(other);
      const bool equal = ap.order == other_order;
      if (condition != equal)
        violate(r, "rigid factor", {{"condition", condition}, {"|Aut(G*H)|", ap.order}});
    }

    r.computed = {{"|Aut(G)|", ag.order},       {"|Aut(H)|", ah.order},
                  {"|Aut(G*H)|", ap.order},     {"isomorphic", iso.has_value()},
                  {"factorizes", factorizes},   {"applied", applied}};
  });
}

CheckReport check_power_theorems(const Graph& g, int k, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "power-theorems";
  require_factor(r, "G", g, true);
  require(r, "G without false twins", !has_false_twins(g));
  require(r, "G without dominating vertices", dominating_vertices(g).empty());
  if (skip_unmet(r)) return r;
  return guarded(std::move(r), [&](CheckReport& r) {
    const auto& b = config.budget;
    const bool rigid = is_rigid(g, b);
    require(r, rigid ? "k >= 2 (G rigid)" : "k >= 3", k >= (rigid ? 2 : 3));
    if (skip_unmet(r)) return;
    const Graph power = conormal_power(g, k);
    const auto d = distinguishing_number(power, config.mode, config.seed, b);
    const auto dp = distinguishing_index(power, config.mode, config.seed, b);
    r.computed = {{"k", k},     {"order", power.order()}, {"size", power.size()},
                  {"D", result_json(d)}, {"D'", result_json(dp)}};
    for (const auto& [name, res] : {std::pair{"D", &d}, std::pair{"D'", &dp}}) {
      if (res->value == 2) continue;
      if (!res->exact) {
        r.verdict = Verdict::skipped_budget;
        r.reason = std::string(name) + " only bounded above by " + std::to_string(res->value);
        return;
      }
      violate(r, name, {{"value", res->value}});
    }
  });
}

CheckReport check_index_theorems(const Graph& g, const Graph& h, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "index-theorems";
  require_factor(r, "G", g, true);
  require_factor(r, "H", h, true);
  if (skip_unmet(r)) return r;
  return guarded(std::move(r), [&](CheckReport& r) {
    const auto& b = config.budget;
    const auto dstar = distinguishing_index(conormal(g, h), config.mode, config.seed, b);
    const auto dbox = distinguishing_index(cartesian(g, h), config.mode, config.seed, b);
    json applied = json::array();
    r.computed = {{"D'(G*H)", result_json(dstar)}, {"D'(G box H)", result_json(dbox)}};

    // Upper bounds on D'(G*H) are sound in any mode; D'(G box H) must be
    // exact to serve as the right-hand side.
    if (!dbox.exact) {
      r.verdict = Verdict::skipped_budget;
      r.reason = "D'(G box H) only bounded above";
      return;
    }
    applied.push_back("cartesian plus one");
    if (dstar.value > dbox.value + 1)
      violate(r, "cartesian plus one", {{"D'(G*H)", dstar.value}, {"D'(G box H)", dbox.value}});

    const bool strong = non_isomorphic(g, h, b) && !is_rigid(g, b) && !is_rigid(h, b) &&
                        twin_and_dominating_free(g) && twin_and_dominating_free(h);
    if (strong) {
      applied.push_back("cartesian");
      if (dstar.value > dbox.value)
        violate(r, "cartesian", {{"D'(G*H)", dstar.value}, {"D'(G box H)", dbox.value}});
    }

    const auto exact_value = [&](const char* what, int expected) {
      applied.push_back(what);
      if (dstar.value == expected) return;
      if (!dstar.exact && dstar.value > expected) {
        r.verdict = Verdict::skipped_budget;
        r.reason = std::string(what) + ": D'(G*H) only bounded above";
        return;
      }
      violate(r, what, {{"D'(G*H)", dstar.value}, {"expected", expected}});
    };
    const bool k2_pair = g.order() == 2 && h.order() == 2;
    if (is_complete(h) || is_complete(g)) exact_value("complete factor", k2_pair ? 3 : 2);
    if (path_or_cycle(g) && path_or_cycle(h)) {
      const bool p2_pair = k2_pair;  // P2 = K2 is the only order-2 path
      exact_value("paths and cycles", p2_pair ? 3 : 2);
    }
    r.computed["applied"] = applied;
  });
}

CheckReport check_spanning_lemmas(const Graph& g, const Graph& sub, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "spanning-lemmas";
  require_factor(r, "G", g, true);
  require(r, "H connected", is_connected(sub));
  const bool spans = is_spanning_subgraph(sub, g);
  int removed = -1;
  if (!spans && sub.order() + 1 == g.order()) {
    for (int v = 0; v < g.order() && removed < 0; ++v)
      if (is_spanning_subgraph(sub, remove_vertex(g, v))) removed = v;
  }
  require(r, "H spans or almost spans G", spans || removed >= 0);
  if (skip_unmet(r)) return r;
  return guarded(std::move(r), [&](CheckReport& r) {
    const auto& b = config.budget;
    const auto dg = distinguishing_index(g, config.mode, config.seed, b);
    const auto dh = distinguishing_index(sub, config.mode, config.seed, b);
    json applied = json::array({"spanned plus one"});
    r.computed = {{"D'(G)", result_json(dg)}, {"D'(H)", result_json(dh)}, {"spans", spans}};
    if (removed >= 0) r.computed["removed vertex"] = removed;
    if (!dh.exact) {
      r.verdict = Verdict::skipped_budget;
      r.reason = "D'(H) only bounded above";
      return;
    }
    if (dg.value > dh.value + 1)
      violate(r, "spanned plus one", {{"D'(G)", dg.value}, {"D'(H)", dh.value}});

    if (spans && automorphisms_preserved_by(g, sub, b)) {
      applied.push_back("subgroup lift");
      r.computed["Aut(G) within Aut(H)"] = true;
      const EdgeLabeling lifted = lift_edge_labeling(g, sub, {dh.witness, dh.value}, 1, b);
      const bool ok = is_distinguishing(g, lifted, b);
      r.computed["lifted labeling"] = lifted.labels;
      r.computed["lifted labeling distinguishes"] = ok;
      if (!ok) violate(r, "lifted labeling", {{"labels", lifted.labels}});
      if (dg.value > dh.value)
        violate(r, "subgroup bound", {{"D'(G)", dg.value}, {"D'(H)", dh.value}});
    }
    r.computed["applied"] = applied;
  });
}

CheckReport check_traceable_index(const Graph& g, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "traceable-index";
  require(r, "order >= 7", g.order() >= 7);
  if (skip_unmet(r)) return r;
  return guarded(std::move(r), [&](CheckReport& r) {
    require(r, "traceable", is_traceable(g, config.budget));
    if (skip_unmet(r)) return;
    const auto d = distinguishing_index(g, config.mode, config.seed, config.budget);
    r.computed = {{"D'", result_json(d)}};
    if (d.value > 2) {
      if (!d.exact) {
        r.verdict = Verdict::skipped_budget;
        r.reason = "D' only bounded above";
        return;
      }
      violate(r, "D' <= 2", {{"D'", d.value}});
    }
  });
}

CheckReport check_complement_invariance(const Graph& g, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "complement-invariance";
  return guarded(std::move(r), [&](CheckReport& r) {
    const auto& b = config.budget;
    const Graph co = complement(g);
    const auto d = distinguishing_number(g, SolveMode::exact, config.seed, b);
    const auto dc = distinguishing_number(co, SolveMode::exact, config.seed, b);
    const auto og = automorphism_summary(g, {}, b).order;
    const auto oc = automorphism_summary(co, {}, b).order;
    r.computed = {{"D(G)", d.value}, {"D(complement)", dc.value}, {"|Aut(G)|", og},
                  {"|Aut(complement)|", oc}};
    if (d.value != dc.value) violate(r, "D", {{"D(G)", d.value}, {"D(complement)", dc.value}});
    if (og != oc) violate(r, "group order", {{"|Aut(G)|", og}, {"|Aut(complement)|", oc}});
  });
}

CheckReport check_family_values(const Graph& g, const CheckConfig& config) {
  CheckReport r;
  r.claim_id = "family-values";
  const int n = g.order();
  const bool complete = is_complete(g);
  const auto shape = path_or_cycle(g);
  const bool path = shape == Family::path && n >= 3;
  const bool cycle = shape == Family::cycle;
  require(r, "path, cycle or complete graph", complete || path || cycle);
  if (skip_unmet(r)) return r;
  return guarded(std::move(r), [&](CheckReport& r) {
    const auto& b = config.budget;
    const auto d = distinguishing_number(g, SolveMode::exact, config.seed, b);
    r.computed = {{"D", d.value}};
    std::optional<int> want_d;
    std::optional<int> want_dp;
    if (path) want_d = want_dp = 2;
    if (cycle) want_d = want_dp = n <= 5 ? 3 : 2;
    if (complete) {
      want_d = n;
      if (n == 4) want_dp = 3;
    }
    if (d.value != *want_d) violate(r, "D", {{"D", d.value}, {"expected", *want_d}});
    if (want_dp) {
      const auto dp = distinguishing_index(g, SolveMode::exact, config.seed, b);
      r.computed["D'"] = dp.value;
      if (dp.value != *want_dp) violate(r, "D'", {{"D'", dp.value}, {"expected", *want_dp}});
    }
    r.computed["family"] = complete ? "complete" : path ? "path" : "cycle";
  });
}

CheckReport run_claim(std::string_view id, std::span<const Graph> graphs,
                      const CheckConfig& config) {
  const ClaimInfo* info = find_claim(id);
  if (!info) throw InvalidArgument("unknown claim id '" + std::string(id) + "'");
  if (static_cast<int>(graphs.size()) != info->arity)
    throw InvalidArgument("claim '" + info->id + "' takes " + std::to_string(info->arity) +
                          " graph(s), got " + std::to_string(graphs.size()));
  if (id == "family-values") return check_family_values(graphs[0], config);
  if (id == "complement-invariance") return check_complement_invariance(graphs[0], config);
  if (id == "product-lemmas") return check_product_lemmas(graphs[0], graphs[1], config);
  if (id == "group-theorems") return check_group_theorems(graphs[0], graphs[1], config);
  if (id == "bound-chain") return check_bound_chain(graphs[0], graphs[1], config);
  if (id == "cartesian-equality") return check_cartesian_equality(graphs[0], graphs[1], config);
  if (id == "power-theorems") return check_power_theorems(graphs[0], config.power, config);
  if (id == "traceable-index") return check_traceable_index(graphs[0], config);
  if (id == "spanning-lemmas") return check_spanning_lemmas(graphs[0], graphs[1], config);
  return check_index_theorems(graphs[0], graphs[1], config);
}

}  // namespace symbreak
