#include "symbreak/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "symbreak/error.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/symmetry.hpp"

namespace symbreak {

std::vector<Graph> enumerate_small_graphs(int n, bool connected_only, bool up_to_iso,
                                          const Budget& budget) {
  if (n < 1) throw InvalidArgument("graph order must be positive");
  if (n > (up_to_iso ? 6 : 5))
    throw InvalidArgument("small-graph enumeration is limited to n <= 5 (n <= 6 up to isomorphism)");
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  const std::uint64_t total = std::uint64_t{1} << pairs.size();

  std::vector<Graph> out;
  // Representatives bucketed by (edge count, degree sequence).
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Edge> edges;
    // Bit order follows graph6: the first pair is the most significant bit.
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (code >> (pairs.size() - 1 - k) & 1) edges.push_back(pairs[k]);
    Graph g(n, edges);
    if (connected_only && !is_connected(g)) continue;
    if (up_to_iso) {
      std::vector<int> key;
      for (int v = 0; v < n; ++v) key.push_back(g.degree(v));
      std::sort(key.begin(), key.end());
      auto& reps = buckets[key];
      bool seen = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) {
        return are_isomorphic(out[r], g, budget);
      });
      if (seen) continue;
      reps.push_back(out.size());
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

int parse_order(std::string_view value) {
  try {
    std::size_t used = 0;
    int n = std::stoi(std::string(value), &used);
    if (used != value.size() || n < 1) throw std::invalid_argument("bad");
    return n;
  } catch (const std::exception&) {
    throw InvalidArgument("corpus: invalid order '" + std::string(value) + "'");
  }
}

}  // namespace

std::vector<Graph> load_corpus(std::string_view spec) {
  auto options = [](std::string_view rest) {
    std::vector<std::string> out;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      out.emplace_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return out;
  };

  if (spec.starts_with("gen:") || spec.starts_with("families:")) {
    const bool families = spec.starts_with("families:");
    spec.remove_prefix(families ? 9 : 4);
    int n = 0;
    bool connected = false;
    bool iso = false;
    for (const std::string& opt : options(spec)) {
      if (opt.starts_with("n=")) {
        n = parse_order(std::string_view(opt).substr(2));
      } else if (opt == "connected" && !families) {
        connected = true;
      } else if (opt == "iso" && !families) {
        iso = true;
      } else {
        throw InvalidArgument("corpus: unknown option '" + opt + "'");
      }
    }
    if (n == 0) throw InvalidArgument("corpus: missing n=K");
    std::vector<Graph> out;
    for (int order = 1; order <= n; ++order) {
      if (families) {
        out.push_back(make_family(Family::path, order));
        if (order >= 3) out.push_back(make_family(Family::cycle, order));
        if (order >= 4) out.push_back(make_family(Family::complete, order));
      } else {
        auto part = enumerate_small_graphs(order, connected, iso);
        std::move(part.begin(), part.end(), std::back_inserter(out));
      }
    }
    return out;
  }

  std::ifstream in{std::string(spec)};
  if (!in) throw ParseError("corpus: cannot open '" + std::string(spec) + "'");
  return read_graph6_stream(in);
}

std::vector<CensusInstance> plan_census(std::size_t corpus_size,
                                        const std::vector<std::string>& claim_ids) {
  for (const std::string& id : claim_ids)
    if (!find_claim(id)) throw InvalidArgument("unknown claim id '" + id + "'");
  std::vector<CensusInstance> plan;
  for (const ClaimInfo& claim : claim_registry()) {
    if (std::find(claim_ids.begin(), claim_ids.end(), claim.id) == claim_ids.end()) continue;
    if (claim.arity == 1) {
      for (std::size_t i = 0; i < corpus_size; ++i)
        plan.push_back({plan.size(), claim.id, {i}});
    } else {
      for (std::size_t i = 0; i < corpus_size; ++i)
        for (std::size_t j = 0; j < corpus_size; ++j)
          plan.push_back({plan.size(), claim.id, {i, j}});
    }
  }
  return plan;
}

CensusSummary run_census(const std::vector<Graph>& corpus,
                         const std::vector<std::string>& claim_ids, const CheckConfig& config,
                         int threads,
                         const std::function<void(const CensusInstance&, const CheckReport&,
                                                  double seconds)>& sink) {
  const std::vector<CensusInstance> plan = plan_census(corpus.size(), claim_ids);
  CensusSummary summary;
  summary.instances = plan.size();

  struct Slot {
    std::optional<CheckReport> report;
    double seconds = 0;
  };
  std::vector<Slot> slots(plan.size());
  std::size_t next_emit = 0;
  std::mutex mutex;
  std::atomic<std::size_t> next_job{0};

  // Emits every finished report at the head of the queue. Caller holds mutex.
  auto flush = [&] {
    while (next_emit < plan.size() && slots[next_emit].report) {
      const CheckReport& report = *slots[next_emit].report;
      ++summary.counts[report.claim_id][to_string(report.verdict)];
      if (report.verdict == Verdict::violated) ++summary.violations;
      if (sink) sink(plan[next_emit], report, slots[next_emit].seconds);
      slots[next_emit].report.reset();
      ++next_emit;
    }
  };

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_job.fetch_add(1);
      if (i >= plan.size()) return;
      CheckConfig local = config;
      local.seed = config.seed + i;
      std::vector<Graph> args;
      for (std::size_t g : plan[i].graphs) args.push_back(corpus[g]);
      const auto start = std::chrono::steady_clock::now();
      CheckReport report = run_claim(plan[i].claim_id, args, local);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      std::lock_guard lock(mutex);
      slots[i].report = std::move(report);
      slots[i].seconds = took.count();
      flush();
    }
  };

  const int count = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return summary;
}

}  // namespace symbreak
