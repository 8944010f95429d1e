#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symbreak/census.hpp"
#include "symbreak/checks.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/error.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/products.hpp"
#include "symbreak/symmetry.hpp"

namespace symbreak::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string mode = "exact";
  std::uint64_t seed = 0;
  std::uint64_t node_budget = Budget{}.node_limit;
  std::size_t element_budget = Budget{}.element_limit;
  int retries = Budget{}.retries;
  int timeout_seconds = 0;
  std::string output = "human";
  int threads = 1;

  bool records() const { return output == "records"; }
  SolveMode solve_mode() const { return mode == "exact" ? SolveMode::exact : SolveMode::certificate; }
  Budget budget() const {
    Budget b;
    b.node_limit = node_budget;
    b.element_limit = element_budget;
    b.retries = retries;
    if (timeout_seconds > 0)
      b.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_seconds);
    return b;
  }
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// Edge lists start with the vertex count; graph6 bytes are never digits.
Graph parse_graph_text(std::string_view text, const std::string& source) {
  const std::string body = trim(text);
  if (body.empty()) throw ParseError(source + ": no graph found");
  if (std::isdigit(static_cast<unsigned char>(body[0]))) return parse_edge_list(body);
  std::istringstream lines(body);
  std::vector<Graph> graphs = read_graph6_stream(lines);
  if (graphs.empty()) throw ParseError(source + ": no graph found");
  return graphs.front();
}

// P<n>, C<n>, K<n> and K<a>,<b>. Digits never occur in graph6, so these
// names cannot shadow a graph6 string.
std::optional<Graph> named_graph(const std::string& arg) {
  static const std::regex family(R"(([PCK])(\d{1,4}))");
  static const std::regex bipartite(R"(K(\d{1,4}),(\d{1,4}))");
  std::smatch m;
  if (std::regex_match(arg, m, family)) {
    const int n = std::stoi(m[2]);
    const char kind = m[1].str()[0];
    return make_family(kind == 'P' ? Family::path : kind == 'C' ? Family::cycle : Family::complete,
                       n);
  }
  if (std::regex_match(arg, m, bipartite))
    return make_complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
  return std::nullopt;
}

Graph load_graph(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph_text(text, "standard input");
  }
  if (auto g = named_graph(arg)) return *g;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    return parse_graph_text(text, arg);
  }
  return parse_graph6(arg);
}

json graph_json(const Graph& g) {
  if (g.order() <= kGraph6MaxOrder) return to_graph6(g);
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"order", g.order()}, {"edges", edges}};
}

std::string render_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Human form of a record: one "key: value" line per field.
void print_human(std::ostream& out, const json& record) {
  for (const auto& [key, value] : record.items()) {
    if (key == "timing") continue;
    out << key << ": " << render_value(value) << '\n';
  }
  if (record.contains("timing"))
    out << "time: " << record["timing"]["seconds"].get<double>() << " s\n";
}

void emit(std::ostream& out, const RunConfig& cfg, const json& record) {
  if (cfg.records())
    out << record.dump() << '\n';
  else
    print_human(out, record);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--mode", cfg.mode, "Solver mode")
      ->check(CLI::IsMember({"exact", "certificate"}))
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Seed for randomized candidate search")->capture_default_str();
  sub->add_option("--node-budget", cfg.node_budget, "Search-node limit per search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--element-budget", cfg.element_budget,
                  "Largest automorphism group listed explicitly")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--retries", cfg.retries, "Random labelings tried before exhaustive search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--timeout", cfg.timeout_seconds, "Wall-clock limit in seconds (0: none)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();
}

int cmd_compute(const std::string& what, const std::string& input, bool dump, const RunConfig& cfg,
                std::ostream& out, std::istream& in) {
  const Graph g = load_graph(input, in);
  const Budget budget = cfg.budget();
  const auto start = std::chrono::steady_clock::now();
  json record = {{"command", "compute"}, {"quantity", what},  {"graph", graph_json(g)},
                 {"order", g.order()},   {"size", g.size()},  {"mode", cfg.mode},
                 {"seed", cfg.seed}};
  if (what == "aut") {
    const GroupSummary summary = automorphism_summary(g, {}, budget);
    record["group_order"] = summary.order;
    json gens = json::array();
    for (const Permutation& p : summary.generators) gens.push_back(p.image());
    record["generators"] = gens;
    record["orbits"] = summary.orbits;
    if (dump) {
      json elements = json::array();
      for (const Permutation& p : automorphisms(g, budget).elements) elements.push_back(p.image());
      record["elements"] = elements;
    }
  } else if (what == "D" || what == "Dprime") {
    const DistinguishingResult r =
        what == "D" ? distinguishing_number(g, cfg.solve_mode(), cfg.seed, budget)
                    : distinguishing_index(g, cfg.solve_mode(), cfg.seed, budget);
    record["value"] = r.value;
    record["exact"] = r.exact;
    record["lower_bound_basis"] = to_string(r.lower_bound_basis);
    record["witness"] = r.witness;
  } else {
    record["connected"] = is_connected(g);
    record["rigid"] = is_rigid(g, budget);
    record["false_twins"] = has_false_twins(g);
    record["dominating_vertices"] = dominating_vertices(g);
    record["traceable"] = is_traceable(g, budget);
  }
  record["timing"] = {{"seconds", seconds_since(start)}};
  emit(out, cfg, record);
  return kOk;
}

int cmd_product(const std::string& kind, const std::string& left_arg,
                const std::string& right_arg, int power, const RunConfig& cfg, std::ostream& out,
                std::ostream& err, std::istream& in) {
  const Graph left = load_graph(left_arg, in);
  const auto apply = [&](const Graph& a, const Graph& b) {
    return kind == "conormal" ? conormal(a, b) : cartesian(a, b);
  };
  Graph result;
  if (power > 0) {
    if (!right_arg.empty()) throw InvalidArgument("--power takes a single graph");
    result = left;
    for (int i = 1; i < power; ++i) result = apply(result, left);
  } else {
    if (right_arg.empty()) throw InvalidArgument("product needs two graphs or --power");
    result = apply(left, load_graph(right_arg, in));
  }
  const bool fits = result.order() <= kGraph6MaxOrder;
  if (!fits)
    err << "notice: order " << result.order() << " exceeds the graph6 limit of "
        << kGraph6MaxOrder << "; writing an edge list\n";
  if (cfg.records()) {
    json record = {{"command", "product"}, {"kind", kind},          {"power", power},
                   {"order", result.order()}, {"size", result.size()}};
    if (fits)
      record["graph6"] = to_graph6(result);
    else
      record["edge_list"] = to_edge_list(result);
    out << record.dump() << '\n';
  } else {
    out << (fits ? to_graph6(result) + "\n" : to_edge_list(result));
  }
  return kOk;
}

std::vector<std::string> select_claims(const std::string& claim) {
  std::vector<std::string> ids;
  if (claim == "all") {
    for (const ClaimInfo& info : claim_registry()) ids.push_back(info.id);
  } else {
    if (!find_claim(claim)) throw InvalidArgument("unknown claim id '" + claim + "'");
    ids.push_back(claim);
  }
  return ids;
}

json report_record(std::size_t index, std::uint64_t seed, const std::vector<const Graph*>& graphs,
                   const CheckReport& report, double seconds) {
  json gs = json::array();
  for (const Graph* g : graphs) gs.push_back(graph_json(*g));
  json record = {{"index", index}, {"graphs", gs}, {"seed", seed}};
  record.update(to_json(report));
  record["timing"] = {{"seconds", seconds}};
  return record;
}

void print_report_human(std::ostream& out, const json& record) {
  out << '#' << record["index"].get<std::size_t>() << ' ' << record["claim"].get<std::string>();
  for (const json& g : record["graphs"]) out << ' ' << (g.is_string() ? g.get<std::string>() : "<large>");
  out << ": " << record["verdict"].get<std::string>() << '\n';
  if (record.contains("witness")) out << "  witness: " << record["witness"].dump() << '\n';
  if (record.contains("reason")) out << "  reason: " << record["reason"].get<std::string>() << '\n';
}

int cmd_verify(const std::string& claim, const std::vector<std::string>& inputs,
               const std::string& corpus_spec, int power, const RunConfig& cfg, std::ostream& out, std::istream& in) {
  const std::vector<std::string> ids = select_claims(claim);
  CheckConfig check;
  check.mode = cfg.solve_mode();
  check.seed = cfg.seed;
  check.budget = cfg.budget();
  check.power = power;

  if (!corpus_spec.empty()) {
    if (!inputs.empty()) throw InvalidArgument("give either graphs or --corpus, not both");
    const std::vector<Graph> corpus = load_corpus(corpus_spec);
    const CensusSummary summary = run_census(
        corpus, ids, check, cfg.threads,
        [&](const CensusInstance& inst, const CheckReport& report, double seconds) {
          std::vector<const Graph*> gs;
          for (std::size_t i : inst.graphs) gs.push_back(&corpus[i]);
          const json record = report_record(inst.index, cfg.seed + inst.index, gs, report, seconds);
          if (cfg.records())
            out << record.dump() << '\n';
          else if (report.verdict == Verdict::violated)
            print_report_human(out, record);
        });
    json counts = summary.counts;
    const json record = {{"summary",
                          {{"corpus", corpus_spec},
                           {"corpus_size", corpus.size()},
                           {"instances", summary.instances},
                           {"violations", summary.violations},
                           {"counts", counts}}},
                         {"seed", cfg.seed}};
    if (cfg.records()) {
      out << record.dump() << '\n';
    } else {
      out << "corpus " << corpus_spec << ": " << corpus.size() << " graphs, " << summary.instances
          << " instances, " << summary.violations << " violations\n";
      for (const auto& [id, verdicts] : summary.counts) {
        out << "  " << id << ':';
        for (const auto& [verdict, n] : verdicts) out << ' ' << verdict << '=' << n;
        out << '\n';
      }
    }
    return summary.violations == 0 ? kOk : kViolation;
  }

  if (inputs.empty()) throw InvalidArgument("verify needs graphs or --corpus");
  std::vector<Graph> graphs;
  for (const std::string& arg : inputs) graphs.push_back(load_graph(arg, in));
  std::vector<const Graph*> ptrs;
  for (const Graph& g : graphs) ptrs.push_back(&g);

  std::vector<std::string> runnable;
  for (const std::string& id : ids)
    if (static_cast<std::size_t>(find_claim(id)->arity) == graphs.size()) runnable.push_back(id);
  if (runnable.empty()) {
    if (claim != "all")
      throw InvalidArgument("claim '" + claim + "' takes " +
                            std::to_string(find_claim(claim)->arity) + " graph(s)");
    throw InvalidArgument("no claim takes " + std::to_string(graphs.size()) + " graph(s)");
  }
  bool violated = false;
  for (std::size_t i = 0; i < runnable.size(); ++i) {
    CheckConfig local = check;
    local.seed = cfg.seed + i;
    const auto start = std::chrono::steady_clock::now();
    const CheckReport report = run_claim(runnable[i], graphs, local);
    violated = violated || report.verdict == Verdict::violated;
    const json record = report_record(i, local.seed, ptrs, report, seconds_since(start));
    if (cfg.records()) {
      out << record.dump() << '\n';
    } else {
      print_report_human(out, record);
      for (const auto& [key, value] : report.computed.items())
        out << "  " << key << " = " << render_value(value) << '\n';
    }
  }
  return violated ? kViolation : kOk;
}

void report_error(std::ostream& err, const RunConfig& cfg, const std::string& kind,
                  const std::string& message) {
  if (cfg.records())
    err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  else
    err << "error: " << message << '\n';
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Symmetry breaking in co-normal products: automorphisms, distinguishing numbers "
               "and indices, and claim verification.",
               "symbreak"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string what, graph_arg;
  bool dump = false;
  auto* compute = app.add_subcommand("compute", "Compute a quantity of one graph");
  compute->add_option("what", what, "aut, D, Dprime or predicates")
      ->required()
      ->check(CLI::IsMember({"aut", "D", "Dprime", "predicates"}));
  compute->add_option("graph", graph_arg, "graph6 string, family name (P5, C6, K4, K1,3), file, or -")
      ->required();
  compute->add_flag("--dump", dump, "List every automorphism (aut only)");
  add_common(compute, cfg);

  std::string kind, left_arg, right_arg;
  int power = 0;
  auto* product = app.add_subcommand("product", "Build a product graph");
  product->add_option("kind", kind, "conormal or cartesian")
      ->required()
      ->check(CLI::IsMember({"conormal", "cartesian"}));
  product->add_option("left", left_arg, "Left factor")->required();
  product->add_option("right", right_arg, "Right factor");
  product->add_option("--power", power, "Iterate the product of one graph k times")
      ->check(CLI::PositiveNumber);
  add_common(product, cfg);

  std::string claim = "all", corpus_spec;
  std::vector<std::string> inputs;
  int claim_power = 3;
  auto* verify = app.add_subcommand("verify", "Check claims on given graphs or a corpus");
  verify->add_option("--claim", claim, "Claim id or 'all'")->required();
  verify->add_option("graphs", inputs, "Graphs (one per claim argument)");
  verify->add_option("--corpus", corpus_spec, "graph6 file or gen:n=K[,connected][,iso] or families:n=K");
  verify->add_option("--power", claim_power, "Exponent for the power claim")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  verify->add_option("--threads", cfg.threads, "Worker threads for corpus runs")
      ->check(CLI::PositiveNumber);
  add_common(verify, cfg);

  auto* census = app.add_subcommand("census", "Run claims over every graph or pair of a corpus");
  census->add_option("--claim", claim, "Claim id or 'all'")->capture_default_str();
  census->add_option("--corpus", corpus_spec, "graph6 file or gen:n=K[,connected][,iso] or families:n=K")
      ->required();
  census->add_option("--power", claim_power, "Exponent for the power claim")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  census->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_common(census, cfg);

  auto* claims = app.add_subcommand("claims", "List claim ids");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help arrives as CallForHelp above; everything else is usage.
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (compute->parsed()) return cmd_compute(what, graph_arg, dump, cfg, out, in);
    if (product->parsed())
      return cmd_product(kind, left_arg, right_arg, power, cfg, out, err, in);
    if (verify->parsed())
      return cmd_verify(claim, inputs, corpus_spec, claim_power, cfg, out, in);
    if (census->parsed())
      return cmd_verify(claim, {}, corpus_spec, claim_power, cfg, out, in);
    if (claims->parsed()) {
      for (const ClaimInfo& info : claim_registry())
        out << info.id << " (" << info.arity << " graph" << (info.arity > 1 ? "s" : "")
            << "): " << info.statement << '\n';
      return kOk;
    }
  } catch (const ParseError& e) {
    report_error(err, cfg, "parse-error", e.what());
    return kInputError;
  } catch (const InvalidArgument& e) {
    report_error(err, cfg, "invalid-argument", e.what());
    return kInputError;
  } catch (const BudgetExceeded& e) {
    report_error(err, cfg, "budget-exceeded", e.what());
    return kBudget;
  } catch (const UndefinedQuantity& e) {
    report_error(err, cfg, "undefined-quantity", e.what());
    return kUndefined;
  } catch (const std::exception& e) {
    report_error(err, cfg, "error", e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace symbreak::cli
