#include <doctest.h>

#include "ctxlab/catalog.hpp"
#include "ctxlab/error.hpp"
#include "ctxlab/hypergraph.hpp"

using namespace ctxlab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

Hypergraph from(std::vector<std::vector<std::string>> cs) { return build_hypergraph(cs); }

}  // namespace

TEST_CASE("vertex order is first appearance") {
  auto h = from({{"b", "a", "c"}, {"c", "d", "e"}});
  CHECK(h.vertex_count() == 5);
  CHECK(h.names() == std::vector<std::string>{"b", "a", "c", "d", "e"});
  CHECK(index(h.vertex("d")) == 3);
  CHECK_FALSE(h.find("zz").has_value());
  CHECK(h.share_context(h.vertex("a"), h.vertex("b")));
  CHECK_FALSE(h.share_context(h.vertex("a"), h.vertex("d")));
  CHECK(h.contexts_of(h.vertex("c")).size() == 2);
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { from({{"a", "a", "b"}}); }) == ErrorCode::DuplicateVertexInContext);
  CHECK(code_of([] { from({{"a", "b"}, {"b", "a"}}); }) == ErrorCode::DuplicateContext);
  CHECK(code_of([] { from({{"a"}}); }) == ErrorCode::ContextTooShort);
  CHECK(code_of([] { from({{}}); }) == ErrorCode::EmptyContext);
  CHECK(code_of([] { from({{"a b", "c"}}); }) == ErrorCode::InvalidName);
  CHECK(code_of([] { from({{"#a", "c"}}); }) == ErrorCode::InvalidName);
  CHECK(code_of([] { from({{"a]", "c"}}); }) == ErrorCode::InvalidName);
  CHECK(code_of([] { Hypergraph({"a", "b", "c"}, {Context{{vertex_at(0), vertex_at(1)}}}); }) ==
        ErrorCode::IsolatedVertex);
  CHECK(code_of([] { Hypergraph({"a", "a"}, {Context{{vertex_at(0), vertex_at(1)}}}); }) ==
        ErrorCode::DuplicateDeclaration);
  CHECK(code_of([] { from({{"a", "b"}}).vertex("q"); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("uniformity") {
  CHECK(uniformity(from({{"a", "b", "c"}})) == 3);
  CHECK(code_of([] { uniformity(from({{"a", "b", "c"}, {"c", "d"}})); }) == ErrorCode::NonUniform);
  CHECK(code_of([] { uniformity(Hypergraph{}); }) == ErrorCode::NonUniform);
}

TEST_CASE("catalog shapes") {
  auto pentagon = catalog("pentagon");
  CHECK(pentagon.hypergraph.vertex_count() == 10);
  CHECK(pentagon.hypergraph.context_count() == 5);
  CHECK(uniformity(pentagon.hypergraph) == 3);
  REQUIRE(pentagon.cycle);
  CHECK(pentagon.cycle->size() == 5);
  CHECK(catalog("house").hypergraph == pentagon.hypergraph);
  CHECK(catalog("pentagram").hypergraph == pentagon.hypergraph);

  auto yu = catalog("yu-oh");
  CHECK(yu.hypergraph.vertex_count() == 25);
  CHECK(yu.hypergraph.context_count() == 16);
  CHECK(incidence_profile(yu.hypergraph).intertwining.size() == 13);

  auto g = catalog("g32");
  CHECK(g.hypergraph.vertex_count() == 15);
  CHECK(g.hypergraph.context_count() == 10);
  CHECK(uniformity(g.hypergraph) == 3);
  const auto profile = incidence_profile(g.hypergraph);
  for (auto d : profile.degree) CHECK(d == 2);

  CHECK(catalog("triangle-demo").hypergraph.context_count() == 1);
  CHECK(code_of([] { catalog("nope"); }) == ErrorCode::UnknownCatalogName);
  for (const auto& name : catalog_names()) CHECK_NOTHROW(validate_bundle(catalog(name)));
}

TEST_CASE("cyclic logics") {
  for (std::size_t m : {3u, 5u, 7u, 9u}) {
    auto b = cyclic_logic(m);
    CHECK(b.hypergraph.vertex_count() == 2 * m);
    CHECK(b.hypergraph.context_count() == m);
    CHECK(incidence_profile(b.hypergraph).intertwining.size() == m);
  }
  CHECK(code_of([] { cyclic_logic(1); }) == ErrorCode::InvalidArgument);
}
