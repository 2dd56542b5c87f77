#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "cli.hpp"
#include "ctxlab/catalog.hpp"
#include "ctxlab/coloring.hpp"
#include "ctxlab/json_export.hpp"
#include "ctxlab/polytope.hpp"
#include "ctxlab/realization.hpp"
#include "ctxlab/states.hpp"

using namespace ctxlab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run_cli(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out);
}

std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(CTXLAB_BINARY) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

const std::string kPentagonPairs = "pairs:(1,3),(3,5),(5,7),(7,9),(9,1)";

}  // namespace

TEST_CASE("chroma yu-oh prints 4 and matches the library") {
  const auto r = run_cli({"chroma", "--catalog", "yu-oh"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chromatic number: 4") != std::string::npos);

  const auto h = catalog("yu-oh").hypergraph;
  const auto lib = to_json(h, chromatic_number(h));
  const auto j = run_json({"chroma", "--catalog", "yu-oh"});
  CHECK(j["command"] == "chroma");
  for (auto& [k, v] : lib.items()) CHECK(j[k] == v);
  CHECK(j["admissible"] == false);
  CHECK(run_cli({"chroma", "--catalog", "yu-oh", "--require-admissible"}).code == 1);
  CHECK(run_cli({"chroma", "--catalog", "pentagon", "--require-admissible"}).code == 0);
}

TEST_CASE("states yu-oh with separation and at-most-one") {
  const auto r = run_cli({"states", "--catalog", "yu-oh", "--separating", "--at-most-one", "h0,h1,h2,h3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("two-valued states: 24") != std::string::npos);
  CHECK(r.out.find("separating: yes") != std::string::npos);

  const auto h = catalog("yu-oh").hypergraph;
  const auto states = enumerate_states(h);
  const auto j = run_json({"states", "--catalog", "yu-oh", "--separating"});
  CHECK(j["count"] == 24);
  CHECK(j["states"] == to_json(h, std::span<const TwoValuedState>(states)));
  CHECK(j["separating"] == to_json(h, separating_report(h, states)));

  CHECK(run_cli({"states", "--catalog", "yu-oh", "--at-most-one", "h0,y1+"}).code == 1);
  CHECK(run_cli({"states", "--catalog", "triangle-demo", "--at-most-one", "a,b,c"}).code == 0);
}

TEST_CASE("hull with the middle state excluded") {
  const auto r = run_cli({"hull", "--catalog", "pentagon", "--coords", kPentagonPairs, "--filter", "exclude:middle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A(1,3) + A(3,5) + A(5,7) + A(7,9) + A(9,1) >= -3") != std::string::npos);
  CHECK(r.out.find("-A(1,3) - A(3,5) - A(5,7) - A(7,9) - A(9,1) >= -1") != std::string::npos);

  const auto j = run_json({"hull", "--catalog", "pentagon", "--coords", kPentagonPairs, "--filter", "exclude:middle"});
  const auto b = catalog("pentagon");
  auto states = enumerate_states(b.hypergraph);
  const auto mid = middle_state_index(states, *b.cycle);
  states.erase(states.begin() + static_cast<long>(mid));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < 5; ++i) pairs.emplace_back((*b.cycle)[i], (*b.cycle)[(i + 1) % 5]);
  const auto pts = evaluate_coordinates(b.hypergraph, states, CoordinateSpec::pair_products(pairs));
  CHECK(j["hull"] == to_json(facet_enumeration(pts.points)));
  CHECK(j["states_used"].size() == 10);

  const auto by_index = run_json(
      {"hull", "--catalog", "pentagon", "--coords", kPentagonPairs, "--filter", "exclude:" + std::to_string(mid)});
  CHECK(by_index["hull"] == j["hull"]);
  const auto brute = run_json(
      {"hull", "--catalog", "pentagon", "--coords", kPentagonPairs, "--filter", "exclude:middle", "--method", "brute"});
  CHECK(brute["hull"] == j["hull"]);
  const auto agg = run_json({"hull", "--catalog", "pentagon", "--coords", kPentagonPairs, "--filter", "aggregable"});
  CHECK(agg["hull"] == j["hull"]);
}

TEST_CASE("aggregate, fractional, verify, validate, catalog") {
  auto r = run_cli({"aggregate", "--catalog", "pentagon"});
  CHECK(r.code == 0);
  CHECK(r.out.find("non-aggregable: 1") != std::string::npos);
  const auto h = catalog("pentagon").hypergraph;
  const auto j = run_json({"aggregate", "--catalog", "pentagon", "--report"});
  const auto report = aggregability_report(h);
  CHECK(j["states"] == to_json(h, std::span<const AggregabilityEntry>(report)));

  const auto f = run_json({"fractional", "--catalog", "pentagon", "--target", CTXLAB_DATA_DIR "/pentagon-omega0.txt"});
  CHECK(f["reachable"] == false);
  CHECK(f["witness"].is_null());
  const auto g = run_json({"fractional", "--catalog", "pentagon", "--values", "0=1/3,1=1/3,2=1/3"});
  CHECK(g["state"]["1"] == "1/3");
  CHECK(run_cli({"fractional", "--catalog", "pentagon", "--values", "0=1/2"}).code == 2);
  CHECK(run_cli({"fractional", "--catalog", "pentagon"}).code == 2);

  const auto v = run_json({"verify-realization", "--catalog", "yu-oh", "--faithful"});
  const auto yu = catalog("yu-oh");
  CHECK(v["ok"] == true);
  CHECK(v["unexpected_orthogonal"] ==
        to_json(yu.hypergraph, verify_realization(yu.hypergraph, *yu.realization, true))["unexpected_orthogonal"]);
  CHECK(run_cli({"verify-realization", "--catalog", "pentagon"}).code == 2);

  CHECK(run_cli({"validate", "--catalog", "g32"}).code == 0);
  CHECK(run_cli({"validate", "-"}, "context a b c\ncontext c d\n").code == 1);
  CHECK(run_cli({"catalog", "list"}).out.find("yu-oh") != std::string::npos);
  const auto shown = run_cli({"catalog", "show", "pentagon"});
  CHECK(shown.code == 0);
  CHECK(run_cli({"chroma", "-"}, shown.out).out.find("chromatic number: 3") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"chroma"}).code == 2);
  CHECK(run_cli({"chroma", "x.logic", "--catalog", "yu-oh"}).code == 2);
  CHECK(run_cli({"chroma", "--catalog", "nope"}).code == 2);
  CHECK(run_cli({"chroma", "/nonexistent/file"}).code == 2);
  const auto bad = run_cli({"chroma", "-"}, "dim 3\nvertex a [1 0]\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run_cli({"states", "--catalog", "pentagon", "--at-most-one", "zz"}).code == 2);
  CHECK(run_cli({"hull", "--catalog", "pentagon", "--coords", "pairs:(1,3"}).code == 2);
  CHECK(run_cli({"hull", "--catalog", "yu-oh", "--coords", "probs:h0", "--filter", "exclude:middle"}).code == 2);
  CHECK(run_cli({"hull", "--catalog", "pentagon", "--coords", "probs:1", "--method", "simplex"}).code == 2);
}

TEST_CASE("binary output is deterministic") {
  for (const std::string& args : std::vector<std::string>{"chroma --catalog yu-oh --json", "states --catalog g32 --json",
                                 "hull --catalog pentagon --coords '" + kPentagonPairs + "' --json",
                                 "aggregate --catalog pentagon --report --json"}) {
    const auto a = run_binary(args);
    CHECK(a == run_binary(args));
    CHECK_FALSE(a.empty());
  }
  CHECK(run_binary("chroma --catalog yu-oh").find("chromatic number: 4") != std::string::npos);
}

TEST_CASE("budget override") {
  setenv("CTXLAB_BUDGET", "3", 1);
  const auto r = run_cli({"chroma", "--catalog", "yu-oh"});
  unsetenv("CTXLAB_BUDGET");
  CHECK(r.code == 2);
  CHECK(r.err.find("SearchBudgetExceeded") != std::string::npos);
  setenv("CTXLAB_BUDGET", "abc", 1);
  CHECK(run_cli({"chroma", "--catalog", "yu-oh"}).code == 2);
  unsetenv("CTXLAB_BUDGET");
}
