#include <regex>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = symbreak::cli::run(std::move(args), out, err, in);
  return {code, out.str(), err.str()};
}

json record(const std::string& line) { return json::parse(line); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("compute") {
    auto r = run({"compute", "D", "Dhc", "--output", "records"});
    CHECK(r.code == 0);
    json j = record(r.out);
    CHECK(j["value"] == 3);
    CHECK(j["seed"] == 0);
    CHECK(j["witness"].size() == 5);
    CHECK(j.contains("timing"));

    r = run({"compute", "aut", "C~", "--output", "records"});
    CHECK(record(r.out)["group_order"] == 24);
    r = run({"compute", "aut", "P3", "--dump", "--output", "records"});
    CHECK(record(r.out)["elements"] == json::parse("[[0,1,2],[2,1,0]]"));

    r = run({"compute", "predicates", "K1,3", "--output", "records"});
    j = record(r.out);
    CHECK(j["false_twins"] == true);
    CHECK(j["traceable"] == false);
    CHECK(j["dominating_vertices"] == json::array({0}));

    r = run({"compute", "D", "C5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value: 3") != std::string::npos);
  }

  TEST_CASE("graph input forms") {
    CHECK(record(run({"compute", "D", "-", "--output", "records"}, "Dhc\n").out)["value"] == 3);
    CHECK(record(run({"compute", "D", "-", "--output", "records"}, "3 2\n0 1\n1 2\n").out)["value"] ==
          2);
    CHECK(record(run({"compute", "D", "K4", "--output", "records"}).out)["value"] == 4);
  }

  TEST_CASE("exit codes") {
    auto r = run({"compute", "Dprime", "A_"});
    CHECK(r.code == symbreak::cli::kUndefined);
    CHECK(r.err.find("undefined") != std::string::npos);
    CHECK(run({"compute", "D", "C~~"}).code == symbreak::cli::kInputError);
    CHECK(run({"compute", "D", "C2"}).code == symbreak::cli::kInputError);
    CHECK(run({"compute", "volume", "C~"}).code == symbreak::cli::kInputError);
    CHECK(run({"verify", "--claim", "bogus-id", "P3"}).code == symbreak::cli::kInputError);
    CHECK(run({"verify", "--claim", "bound-chain", "P3"}).code == symbreak::cli::kInputError);
    CHECK(run({"compute", "D", "C~", "--node-budget", "0"}).code == symbreak::cli::kInputError);
    CHECK(run({"compute", "D", "C8", "--node-budget", "2", "--retries", "1"}).code ==
          symbreak::cli::kBudget);
    CHECK(run({"verify", "--claim", "bound-chain", "K3", "P4"}).code ==
          symbreak::cli::kViolation);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == symbreak::cli::kInputError);
  }

  TEST_CASE("products") {
    CHECK(run({"product", "conormal", "K2", "K2"}).out == "C~\n");
    CHECK(run({"product", "cartesian", "A_", "A_"}).out == "Cr\n");
    const auto big = run({"product", "conormal", "--power", "3", "P4"});
    CHECK(big.code == 0);
    CHECK(big.out.rfind("64 ", 0) == 0);
    CHECK(big.err.find("edge list") != std::string::npos);
    CHECK(run({"product", "conormal", "P4"}).code == symbreak::cli::kInputError);
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "--claim", "index-theorems", "P3", "K2", "--output", "records"});
    CHECK(r.code == 0);
    json j = record(r.out);
    CHECK(j["verdict"] == "holds");
    CHECK(j["computed"]["D'(G*H)"]["value"] == 2);
    CHECK(j["graphs"] == json::array({"Bg", "A_"}));

    r = run({"verify", "--claim", "all", "--corpus", "gen:n=3", "--output", "records"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(record(ls.back())["summary"]["violations"] == 0);
  }

  TEST_CASE("census records are byte-identical apart from timing") {
    const std::vector<std::string> args{"census", "--corpus", "gen:n=3", "--seed", "5",
                                        "--output", "records"};
    auto strip = [](const std::string& text) {
      static const std::regex timing(R"(,"timing":\{[^}]*\})");
      return std::regex_replace(text, timing, "");
    };
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(strip(a.out) == strip(b.out));
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "2"});
    CHECK(strip(run(threaded).out) == strip(a.out));
    for (const auto& line : lines(a.out)) CHECK(record(line).contains("seed"));
  }
}
