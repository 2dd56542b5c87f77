#include <doctest.h>

#include <set>

#include "ctxlab/catalog.hpp"
#include "ctxlab/coloring.hpp"
#include "ctxlab/error.hpp"
#include "oracles.hpp"

using namespace ctxlab;

namespace {

Coloring to_coloring(const std::vector<std::size_t>& raw, std::size_t k) {
  Coloring c;
  c.k = k;
  for (auto x : raw) c.colors.push_back(static_cast<Color>(x));
  return c;
}

}  // namespace

TEST_CASE("check_coloring reports violations") {
  const auto h = catalog("triangle-demo").hypergraph;
  CHECK(check_coloring(h, Coloring{{0, 1, 2}, 3}).admissible());
  const auto bad = check_coloring(h, Coloring{{0, 0, 1}, 3});
  CHECK_FALSE(bad.exclusive);
  CHECK_FALSE(bad.complete);
  CHECK_FALSE(bad.violations.empty());
  const auto wide = check_coloring(h, Coloring{{0, 1, 3}, 4});
  CHECK(wide.exclusive);
  CHECK_FALSE(wide.complete);
}

TEST_CASE("chromatic numbers of the catalog") {
  CHECK(chromatic_number(catalog("triangle-demo").hypergraph).chromatic_number == 3);
  CHECK(chromatic_number(catalog("pentagon").hypergraph).chromatic_number == 3);
  const auto yu = catalog("yu-oh").hypergraph;
  const auto r = chromatic_number(yu);
  CHECK(r.chromatic_number == 4);
  CHECK(r.exhausted == std::vector<std::size_t>{3});
  REQUIRE(r.witness);
  CHECK(check_coloring(yu, *r.witness).exclusive);
  CHECK(chromatic_number(catalog("g32").hypergraph).chromatic_number == 4);
}

TEST_CASE("chromatic number bounds") {
  const auto yu = catalog("yu-oh").hypergraph;
  CHECK_THROWS_AS(chromatic_number(yu, std::size_t{3}), Error);
  SearchBudget tiny;
  tiny.max_nodes = 5;
  try {
    chromatic_number(yu, std::nullopt, tiny);
    FAIL("expected budget exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchBudgetExceeded);
  }
}

TEST_CASE("enumeration up to relabeling matches the brute-force orbit count") {
  for (const char* name : {"triangle-demo", "pentagon"}) {
    const auto h = catalog(name).hypergraph;
    std::set<std::vector<Color>> canon;
    std::size_t raw = 0;
    oracle::exclusive_colorings(h, 3, [&](const std::vector<std::size_t>& c) {
      ++raw;
      canon.insert(canonicalize(h, to_coloring(c, 3)).colors);
    });
    const auto listed = enumerate_colorings(h, 3, true);
    CHECK(listed.size() == canon.size());
    for (const auto& c : listed) {
      CHECK(check_coloring(h, c).exclusive);
      CHECK(canon.count(c.colors) == 1);
    }
    CHECK(enumerate_colorings(h, 3, false).size() == raw);
  }
}

TEST_CASE("pentagon parity: no exclusive 3-coloring paints all intertwiners alike") {
  const auto b = catalog("pentagon");
  std::size_t colorings = 0;
  std::size_t monochrome = 0;
  oracle::exclusive_colorings(b.hypergraph, 3, [&](const std::vector<std::size_t>& c) {
    ++colorings;
    std::set<std::size_t> used;
    for (auto v : *b.cycle) used.insert(c[index(v)]);
    if (used.size() == 1) ++monochrome;
  });
  CHECK(colorings > 0);
  CHECK(monochrome == 0);
}

TEST_CASE("relabelings and canonical form") {
  const auto h = catalog("pentagon").hypergraph;
  const auto all = admissible_colorings(h);
  REQUIRE_FALSE(all.empty());
  for (const auto& c : all) {
    const auto orbit = relabelings(c);
    CHECK(orbit.size() == 6);
    for (const auto& r : orbit) CHECK(canonicalize(h, r) == c);
  }
}

TEST_CASE("chromatic separation agrees with the brute-force definition") {
  const auto h = catalog("pentagon").hypergraph;
  const auto table = chromatic_separation(h);
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<bool>> sep(n, std::vector<bool>(n, false));
  oracle::exclusive_colorings(h, 3, [&](const std::vector<std::size_t>& c) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (c[u] != c[v]) sep[u][v] = true;
      }
    }
  });
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      CHECK(table.is_separated(vertex_at(u), vertex_at(v)) == sep[u][v]);
    }
  }
  CHECK_THROWS_AS(table.is_separated(vertex_at(0), vertex_at(0)), Error);
  CHECK_THROWS_AS(chromatic_separation(catalog("yu-oh").hypergraph), Error);
}

TEST_CASE("find_coloring argument handling") {
  const auto h = catalog("triangle-demo").hypergraph;
  CHECK_FALSE(find_coloring(h, 4, true).has_value());
  CHECK(find_coloring(h, 4, false).has_value());
  CHECK_THROWS_AS(find_coloring(h, 2), Error);
}
