#include "ctxlab/catalog.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "ctxlab/error.hpp"

namespace ctxlab {

namespace {

using Names = std::vector<std::vector<std::string>>;

LogicBundle triangle_demo() {
  const Names contexts = {{"a", "b", "c"}};
  LogicBundle b{build_hypergraph(contexts), std::nullopt, "triangle-demo", {}, std::nullopt, {}};
  b.notes.push_back("single 3-element context");
  return b;
}

// Contexts as drawn in the Yu-Oh figure: nine outer contexts, three spokes
// through h0, three chords, and the triangle z1 z2 z3.
const Names& yu_oh_contexts() {
  static const Names contexts = {
      {"y1+", "z1", "y1-"}, {"y1-", "u1", "h1"},  {"h1", "u2", "y2+"},  {"y2+", "z2", "y2-"},
      {"y2-", "u3", "h2"},  {"h2", "u4", "y3+"},  {"y3+", "z3", "y3-"}, {"y3-", "u5", "h3"},
      {"h3", "u6", "y1+"},  {"y1-", "u7", "h0"},  {"y2-", "u8", "h0"},  {"y3-", "u9", "h0"},
      {"h1", "u10", "y3+"}, {"h2", "u11", "y1+"}, {"h3", "u12", "y2+"}, {"z1", "z2", "z3"},
  };
  return contexts;
}

LogicBundle yu_oh() {
  Hypergraph h = build_hypergraph(yu_oh_contexts());
  Realization r;
  r.dimension = 3;
  r.rays.resize(h.vertex_count());

  const std::array<std::pair<const char*, Ray>, 13> labelled = {{
      {"z1", Ray{1, 0, 0}},  {"z2", Ray{0, 1, 0}},   {"z3", Ray{0, 0, 1}},
      {"y1-", Ray{0, 1, -1}}, {"y2-", Ray{1, 0, -1}}, {"y3-", Ray{1, -1, 0}},
      {"y1+", Ray{0, 1, 1}}, {"y2+", Ray{1, 0, 1}},  {"y3+", Ray{1, 1, 0}},
      {"h0", Ray{1, 1, 1}},  {"h1", Ray{-1, 1, 1}},  {"h2", Ray{1, -1, 1}},
      {"h3", Ray{1, 1, -1}},
  }};
  for (const auto& [name, ray] : labelled) r.rays[index(h.vertex(name))] = ray;

  // Each completion vertex is the middle member of its context; its ray is
  // orthogonal to the two labelled endpoints.
  for (const auto& ctx : h.contexts()) {
    const VertexId mid = ctx.members[1];
    if (h.name(mid).front() != 'u') continue;
    r.rays[index(mid)] =
        cross_complete(*r.rays[index(ctx.members[0])], *r.rays[index(ctx.members[2])]);
  }

  LogicBundle b{std::move(h), std::move(r), "yu-oh", {}, std::nullopt, {}};
  b.notes.push_back("13 labelled rays; u1..u12 completed by cross products");
  return b;
}

// Petersen graph: outer cycle 0..4, inner pentagram 5..9, spokes i--i+5.
// Atoms are the 15 edges, contexts the 10 nodes (each holding its 3 edges).
LogicBundle g32() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  auto edge_name = [](std::pair<int, int> e) {
    auto [u, v] = std::minmax(e.first, e.second);
    return "e" + std::to_string(u) + "-" + std::to_string(v);
  };
  Names contexts(10);
  for (const auto& e : edges) {
    contexts[e.first].push_back(edge_name(e));
    contexts[e.second].push_back(edge_name(e));
  }
  for (auto& c : contexts) std::sort(c.begin(), c.end());
  LogicBundle b{build_hypergraph(contexts), std::nullopt, "g32", {}, std::nullopt, {}};
  b.notes.push_back("atoms = edges of the Petersen graph, contexts = its nodes");
  return b;
}

}  // namespace

LogicBundle cyclic_logic(std::size_t count) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least two contexts");
  const std::size_t vertices = 2 * count;
  Names contexts;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t first = 2 * i + 1;
    const std::size_t last = (2 * i + 2) % vertices + 1;
    contexts.push_back({std::to_string(first), std::to_string(first + 1), std::to_string(last)});
  }
  Hypergraph h = build_hypergraph(contexts);
  std::vector<VertexId> cycle;
  for (std::size_t i = 0; i < count; ++i) cycle.push_back(h.vertex(std::to_string(2 * i + 1)));
  LogicBundle b{std::move(h), std::nullopt, "cycle-" + std::to_string(count), {}, std::move(cycle),
                {}};
  return b;
}

LogicBundle catalog(std::string_view name) {
  if (name == "pentagon" || name == "house" || name == "pentagram") {
    LogicBundle b = cyclic_logic(5);
    b.name = "pentagon";
    b.aliases = {"house", "pentagram"};
    b.notes.push_back("vertex numbering matches pair observables A13, A35, A57, A79, A91");
    return b;
  }
  if (name == "yu-oh") return yu_oh();
  if (name == "g32") return g32();
  if (name == "triangle-demo") return triangle_demo();
  throw Error(ErrorCode::UnknownCatalogName, "no catalog entry '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() { return {"pentagon", "yu-oh", "g32", "triangle-demo"}; }

void validate_bundle(const LogicBundle& bundle) {
  const Hypergraph& h = bundle.hypergraph;
  if (bundle.realization) {
    const Realization& r = *bundle.realization;
    if (r.rays.size() != h.vertex_count()) {
      throw Error(ErrorCode::DomainMismatch, "realization size differs from vertex count");
    }
    for (const auto& ray : r.rays) {
      if (ray && ray->dimension() != r.dimension) {
        throw Error(ErrorCode::DomainMismatch, "ray dimension differs from declared dimension");
      }
    }
  }
  if (bundle.cycle) {
    for (VertexId v : *bundle.cycle) {
      if (index(v) >= h.vertex_count()) {
        throw Error(ErrorCode::DomainMismatch, "cycle references unknown vertex");
      }
      if (h.contexts_of(v).size() < 2) {
        throw Error(ErrorCode::DomainMismatch,
                    "cycle vertex '" + h.name(v) + "' is not intertwining");
      }
    }
  }
}

}  // namespace ctxlab
