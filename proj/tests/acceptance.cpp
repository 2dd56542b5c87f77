// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ctxlab/catalog.hpp"
#include "ctxlab/coloring.hpp"
#include "ctxlab/dsl.hpp"
#include "ctxlab/error.hpp"
#include "ctxlab/polytope.hpp"
#include "ctxlab/realization.hpp"
#include "ctxlab/states.hpp"
#include "oracles.hpp"

using namespace ctxlab;

namespace {

int failures = 0;

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

void criterion(int id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %2d %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, c.ok ? "" : ": ",
              c.detail.c_str());
  if (!c.ok) ++failures;
}

bool has_facet(const PolytopeHRep& h, const std::vector<long>& normal, long bound) {
  for (const auto& f : h.facets) {
    if (f.bound != bound || f.normal.size() != normal.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < normal.size(); ++i) same = same && f.normal[i] == normal[i];
    if (same) return true;
  }
  return false;
}

std::vector<std::vector<std::uint8_t>> values_of(const std::vector<TwoValuedState>& s) {
  std::vector<std::vector<std::uint8_t>> out;
  for (const auto& x : s) out.push_back(x.values);
  return out;
}

PointSet pentagon_pairs(bool drop_middle) {
  const auto b = catalog("pentagon");
  auto states = enumerate_states(b.hypergraph);
  if (drop_middle) states.erase(states.begin() + static_cast<long>(middle_state_index(states, *b.cycle)));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < 5; ++i) pairs.emplace_back((*b.cycle)[i], (*b.cycle)[(i + 1) % 5]);
  return evaluate_coordinates(b.hypergraph, states, CoordinateSpec::pair_products(pairs));
}

Hypergraph random_uniform_logic(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(4, 16), nc(1, 8), sz(2, 4);
  const int n = nv(rng);
  const int s = sz(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::set<std::set<int>> contexts;
  const int m = nc(rng);
  for (int i = 0; i < m; ++i) {
    std::set<int> c;
    while (static_cast<int>(c.size()) < s) c.insert(pick(rng));
    contexts.insert(c);
  }
  std::vector<std::vector<std::string>> named;
  for (const auto& c : contexts) {
    std::vector<std::string> ctx;
    for (int v : c) ctx.push_back("v" + std::to_string(v));
    named.push_back(ctx);
  }
  return build_hypergraph(named);
}

std::vector<RationalPoint> random_points(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 3), count(1, 8), coord(-3, 3), den(1, 2);
  const int d = dim(rng);
  const int n = count(rng);
  std::vector<RationalPoint> pts;
  for (int i = 0; i < n; ++i) {
    RationalPoint p(d);
    for (auto& x : p) {
      x = Rational(coord(rng), den(rng));
      x.canonicalize();
    }
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

int main() {
  criterion(1, "Yu-Oh chromatic number is 4 with k=3 exhausted", [](Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto h = catalog("yu-oh").hypergraph;
    const auto r = chromatic_number(h);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(r.chromatic_number == 4, "chromatic number " + std::to_string(r.chromatic_number));
    c.require(r.exhausted == std::vector<std::size_t>{3}, "k=3 not certified exhausted");
    c.require(r.witness && r.witness->k == 4 && check_coloring(h, *r.witness).exclusive, "witness not exclusive");
    c.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  });

  criterion(2, "Yu-Oh: 24 separating states, at most one of h0..h3", [](Check& c) {
    const auto h = catalog("yu-oh").hypergraph;
    const auto states = enumerate_states(h);
    c.require(states.size() == 24, std::to_string(states.size()) + " states");
    c.require(separating_report(h, states).separating, "not separating");
    const std::vector<VertexId> hs{h.vertex("h0"), h.vertex("h1"), h.vertex("h2"), h.vertex("h3")};
    c.require(subset_value_profile(states, hs) == 1, "profile != 1");
  });

  criterion(3, "Yu-Oh realization verified on all 16 contexts", [](Check& c) {
    const auto b = catalog("yu-oh");
    c.require(b.realization && b.realization->complete(), "incomplete realization");
    const auto r = verify_realization(b.hypergraph, *b.realization, false);
    c.require(r.ok() && r.context_violations.empty(), "context violations");
    for (const auto& ctx : b.hypergraph.contexts()) {
      std::vector<std::vector<Integer>> rows;
      for (auto v : ctx.members) rows.push_back(b.realization->rays[index(v)]->coords());
      c.require(rank(rows) == 3, "rank deficient context");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
          Integer s = 0;
          for (std::size_t k = 0; k < 3; ++k) s += rows[i][k] * rows[j][k];
          c.require(s == 0, "nonorthogonal pair");
        }
      }
    }
  });

  criterion(4, "G32: 15 bi-intertwined vertices, 10 contexts, chi = 4, separating", [](Check& c) {
    const auto h = catalog("g32").hypergraph;
    c.require(h.vertex_count() == 15 && h.context_count() == 10, "shape");
    c.require(uniformity(h) == 3, "not 3-uniform");
    for (auto d : incidence_profile(h).degree) c.require(d == 2, "degree != 2");
    c.require(chromatic_number(h).chromatic_number == 4, "chi != 4");
    c.require(separating_report(h, enumerate_states(h)).separating, "states not separating");
  });

  criterion(5, "Pentagon: chi = 3, eleven states", [](Check& c) {
    const auto h = catalog("pentagon").hypergraph;
    c.require(chromatic_number(h).chromatic_number == 3, "chi != 3");
    c.require(enumerate_states(h).size() == 11, "state count");
  });

  criterion(6, "Pentagon parity: intertwiners never monochrome, middle state not aggregable", [](Check& c) {
    const auto b = catalog("pentagon");
    std::size_t count = 0, mono = 0;
    oracle::exclusive_colorings(b.hypergraph, 3, [&](const std::vector<std::size_t>& col) {
      ++count;
      std::set<std::size_t> used;
      for (auto v : *b.cycle) used.insert(col[index(v)]);
      mono += used.size() == 1;
    });
    c.require(count > 0 && mono == 0, "monochrome intertwiners found");
    const auto states = enumerate_states(b.hypergraph);
    const auto report = aggregability_report(b.hypergraph);
    c.require(!report[middle_state_index(states, *b.cycle)].witness, "middle state aggregable");
  });

  criterion(7, "Pentagon omega0 is a rational state not reachable with k = 3", [](Check& c) {
    const auto b = catalog("pentagon");
    RationalState w;
    w.values.assign(b.hypergraph.vertex_count(), Rational(0));
    for (auto v : *b.cycle) w.values[index(v)] = Rational(1, 2);
    c.require(is_rational_state(b.hypergraph, w.values), "not a rational state");
    c.require(!fractional_reachable(b.hypergraph, w, 3), "reachable");
  });

  criterion(8, "Hull of all 11 states has the facet sum A >= -3", [](Check& c) {
    const auto hrep = facet_enumeration(pentagon_pairs(false).points);
    c.require(has_facet(hrep, {1, 1, 1, 1, 1}, -3), "facet missing");
  });

  criterion(9, "Reduced hull has facets sum A >= -3 and sum A <= 1", [](Check& c) {
    const auto hrep = facet_enumeration(pentagon_pairs(true).points);
    c.require(has_facet(hrep, {1, 1, 1, 1, 1}, -3), "lower facet missing");
    c.require(has_facet(hrep, {-1, -1, -1, -1, -1}, -1), "upper facet missing");
  });

  criterion(10, "Property suites", [](Check& c) {
    // State enumeration against the 2^|V| oracle.
    std::vector<Hypergraph> logics;
    for (const auto& name : catalog_names()) {
      if (catalog(name).hypergraph.vertex_count() <= 20) logics.push_back(catalog(name).hypergraph);
    }
    for (std::size_t m : {3u, 5u, 7u, 9u}) logics.push_back(cyclic_logic(m).hypergraph);
    std::mt19937 rng(1);
    for (int i = 0; i < 100; ++i) logics.push_back(random_uniform_logic(rng));
    for (const auto& h : logics) {
      c.require(values_of(enumerate_states(h)) == oracle::two_valued_states(h), "state oracle mismatch");
    }

    // Aggregation soundness and covering.
    for (const auto& name : catalog_names()) {
      const auto h = catalog(name).hypergraph;
      const auto states = enumerate_states(h);
      const std::set<TwoValuedState> all(states.begin(), states.end());
      for (const auto& col : admissible_colorings(h)) {
        std::vector<int> cover(h.vertex_count(), 0);
        for (Color g = 0; g < col.k; ++g) {
          const auto s = aggregate(h, col, g);
          c.require(check_state(h, s.values).valid && all.count(s), "unsound aggregation on " + name);
          for (std::size_t v = 0; v < cover.size(); ++v) cover[v] += s.values[v];
        }
        for (int x : cover) c.require(x == 1, "covering fails on " + name);
      }
    }

    // Hull soundness, idempotence and oracle equivalence.
    for (unsigned seed = 1; seed <= 200; ++seed) {
      std::mt19937 r(seed);
      const auto pts = random_points(r);
      const auto hrep = facet_enumeration(pts);
      c.require(verify_hrep(pts, hrep).sound, "unsound hull, seed " + std::to_string(seed));
      std::set<std::vector<std::size_t>> inc;
      for (const auto& f : hrep.facets) {
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if (f.tight_at(pts[i])) tight.push_back(i);
        }
        inc.insert(tight);
      }
      c.require(inc == oracle::facet_incidences(pts), "oracle mismatch, seed " + std::to_string(seed));
      if (hrep.dimension == hrep.ambient_dimension && hrep.dimension > 0) {
        c.require(facet_enumeration(vertex_enumeration(hrep)) == hrep, "not idempotent, seed " + std::to_string(seed));
      }
    }

    // DSL round trip and fuzzing.
    for (const auto& name : catalog_names()) {
      const auto b = catalog(name);
      const auto back = parse_logic(serialize_logic(b));
      c.require(back.hypergraph == b.hypergraph && back.realization == b.realization && back.cycle == b.cycle,
                "round trip fails on " + name);
    }
    const std::string alphabet = "abc 01[]/-#\ndimvertexcontextcycle";
    std::mt19937 fr(99);
    std::uniform_int_distribution<int> len(0, 60), ch(0, static_cast<int>(alphabet.size()) - 1);
    for (int i = 0; i < 2000; ++i) {
      std::string text;
      const int n = len(fr);
      for (int k = 0; k < n; ++k) text += alphabet[ch(fr)];
      try {
        parse_logic(text);
      } catch (const ParseError&) {
      }
    }
  });

  criterion(11, "Probability hull over 1,3,5,7,9 has the facet sum p <= 2", [](Check& c) {
    const auto b = catalog("pentagon");
    const auto states = enumerate_states(b.hypergraph);
    const auto ps = evaluate_coordinates(b.hypergraph, states, CoordinateSpec::probabilities(*b.cycle));
    const auto hrep = facet_enumeration(ps.points);
    c.require(has_facet(hrep, {-1, -1, -1, -1, -1}, -2), "facet missing");
    std::vector<std::vector<Rational>> tight;
    for (const auto& p : ps.points) {
      Rational s = 0;
      for (const auto& x : p) s += x;
      c.require(s <= 2, "point violates sum p <= 2");
      if (s == 2) tight.push_back(p);
    }
    c.require(oracle::affine_dimension(tight) == 4, "tight points do not span a facet");
  });

  std::printf("%s: %d failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
