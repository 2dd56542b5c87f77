#include <doctest.h>

#include "ctxlab/catalog.hpp"
#include "ctxlab/coloring.hpp"
#include "ctxlab/json_export.hpp"
#include "ctxlab/polytope.hpp"
#include "ctxlab/states.hpp"

using namespace ctxlab;

TEST_CASE("chromatic report fields") {
  const auto h = catalog("yu-oh").hypergraph;
  const auto j = to_json(h, chromatic_number(h));
  CHECK(j["chromatic_number"] == 4);
  CHECK(j["exhausted"] == Json::array({3}));
  CHECK(j["witness"]["k"] == 4);
  CHECK(j["witness"]["assignment"].size() == 25);
}

TEST_CASE("states are sorted name lists") {
  const auto h = catalog("pentagon").hypergraph;
  const auto states = enumerate_states(h);
  const auto j = to_json(h, std::span<const TwoValuedState>(states));
  CHECK(j.size() == 11);
  for (const auto& s : j) {
    CHECK(s.is_array());
    CHECK_FALSE(s.empty());
  }
}

TEST_CASE("rationals as strings, empty lists as arrays") {
  const auto h = catalog("triangle-demo").hypergraph;
  RationalState s{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}};
  CHECK(to_json(h, s)["a"] == "1/3");
  PolytopeHRep empty;
  const auto j = to_json(empty);
  CHECK(j["facets"].is_array());
  CHECK(j["facets"].empty());
  CHECK(j["equalities"].is_array());
}

TEST_CASE("inequality shape") {
  LinearInequality f{{1, 1, 1, 1, 1}, -3, LinearInequality::Sense::ge};
  CHECK(export_json(to_json(f)) ==
        "{\n  \"normal\": [\n    1,\n    1,\n    1,\n    1,\n    1\n  ],\n  \"bound\": -3,\n  \"sense\": \"ge\"\n}\n");
}

TEST_CASE("export is deterministic") {
  const auto b = catalog("yu-oh");
  CHECK(export_json(to_json(b)) == export_json(to_json(catalog("yu-oh"))));
}
