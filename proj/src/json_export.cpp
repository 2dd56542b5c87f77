#include "ctxlab/json_export.hpp"

namespace ctxlab {

namespace {

Json integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json names(const Hypergraph& h, std::span<const VertexId> vs) {
  Json arr = Json::array();
  for (VertexId v : vs) arr.push_back(h.name(v));
  return arr;
}

Json pairs(const Hypergraph& h, std::span<const std::pair<VertexId, VertexId>> ps) {
  Json arr = Json::array();
  for (auto [u, v] : ps) arr.push_back(Json::array({h.name(u), h.name(v)}));
  return arr;
}

const char* kind_name(ColoringViolation::Kind k) {
  switch (k) {
    case ColoringViolation::Kind::Repeated: return "repeated";
    case ColoringViolation::Kind::Missing: return "missing";
    case ColoringViolation::Kind::Unbalanced: return "unbalanced";
  }
  return "unknown";
}

}  // namespace

Json to_json(const Hypergraph& h, const Coloring& c) {
  Json assignment = Json::object();
  for (std::size_t v = 0; v < c.colors.size(); ++v) assignment[h.name(vertex_at(v))] = c.colors[v];
  return Json{{"k", c.k}, {"assignment", std::move(assignment)}};
}

Json to_json(const Hypergraph&, const ColoringReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item{{"kind", kind_name(v.kind)}};
    if (v.kind != ColoringViolation::Kind::Unbalanced) item["context"] = v.context;
    item["color"] = v.color;
    if (v.kind != ColoringViolation::Kind::Missing) item["count"] = v.count;
    violations.push_back(std::move(item));
  }
  return Json{{"exclusive", r.exclusive},     {"complete", r.complete},
              {"admissible", r.admissible()}, {"equitable", r.equitable},
              {"class_sizes", r.class_sizes}, {"violations", std::move(violations)}};
}

Json to_json(const Hypergraph& h, const ChromaticResult& r) {
  return Json{{"chromatic_number", r.chromatic_number},
              {"uniformity", r.uniformity},
              {"witness", r.witness ? to_json(h, *r.witness) : Json(nullptr)},
              {"exhausted", r.exhausted}};
}

Json to_json(const Hypergraph& h, const TwoValuedState& s) {
  const auto support = s.support();
  return names(h, support);
}

Json to_json(const Hypergraph& h, std::span<const TwoValuedState> states) {
  Json arr = Json::array();
  for (const auto& s : states) arr.push_back(to_json(h, s));
  return arr;
}

Json to_json(const Hypergraph& h, const SeparatingReport& r) {
  return Json{{"separating", r.separating}, {"unseparated_pairs", pairs(h, r.unseparated_pairs)}};
}

Json to_json(const Hypergraph& h, std::span<const AggregabilityEntry> entries) {
  Json arr = Json::array();
  for (const auto& e : entries) {
    Json witness = nullptr;
    if (e.witness) {
      witness = Json{{"coloring", to_json(h, e.witness->coloring)}, {"color", e.witness->color}};
    }
    arr.push_back(Json{{"state", to_json(h, e.state)},
                       {"aggregable", e.witness.has_value()},
                       {"witness", std::move(witness)}});
  }
  return arr;
}

Json to_json(const Hypergraph& h, const RationalState& s) {
  Json obj = Json::object();
  for (std::size_t v = 0; v < s.values.size(); ++v) obj[h.name(vertex_at(v))] = to_string(s.values[v]);
  return obj;
}

Json to_json(const Hypergraph& h, const FractionalWitness& w) {
  Json values = Json::array();
  for (const auto& q : w.values) values.push_back(to_string(q));
  return Json{{"coloring", to_json(h, w.coloring)}, {"values", std::move(values)}};
}

Json to_json(const Hypergraph& h, const RealizationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.context_violations) {
    violations.push_back(Json{
        {"context", v.context},
        {"pair", v.pair ? Json::array({h.name(v.pair->first), h.name(v.pair->second)}) : Json(nullptr)},
        {"reason", v.reason}});
  }
  return Json{{"ok", r.ok()},
              {"contexts_ok", r.contexts_ok},
              {"context_violations", std::move(violations)},
              {"duplicate_rays", pairs(h, r.duplicate_rays)},
              {"faithful_checked", r.faithful_checked},
              {"unexpected_orthogonal", pairs(h, r.unexpected_orthogonal)}};
}

Json to_json(const Hypergraph& h, const Realization& r) {
  Json rays = Json::object();
  for (std::size_t v = 0; v < r.rays.size(); ++v) {
    Json ray = nullptr;
    if (r.rays[v]) {
      ray = Json::array();
      for (const auto& z : r.rays[v]->coords()) ray.push_back(integer(z));
    }
    rays[h.name(vertex_at(v))] = std::move(ray);
  }
  return Json{{"dimension", r.dimension}, {"rays", std::move(rays)}};
}

Json to_json(const Hypergraph& h, const IncidenceProfile& p) {
  Json degrees = Json::object();
  for (std::size_t v = 0; v < p.degree.size(); ++v) degrees[h.name(vertex_at(v))] = p.degree[v];
  return Json{{"degrees", std::move(degrees)}, {"intertwining", names(h, p.intertwining)}};
}

Json to_json(const Hypergraph& h, const SeparationTable& t) {
  const auto unseparated = t.unseparated_pairs();
  return Json{{"separating", unseparated.empty()}, {"unseparated_pairs", pairs(h, unseparated)}};
}

Json to_json(const LinearInequality& ineq) {
  Json normal = Json::array();
  for (const auto& z : ineq.normal) normal.push_back(integer(z));
  return Json{{"normal", std::move(normal)},
              {"bound", integer(ineq.bound)},
              {"sense", ineq.sense == LinearInequality::Sense::ge ? "ge" : "eq"}};
}

Json to_json(const PolytopeHRep& hrep) {
  Json equalities = Json::array();
  for (const auto& e : hrep.equalities) equalities.push_back(to_json(e));
  Json facets = Json::array();
  for (const auto& f : hrep.facets) facets.push_back(to_json(f));
  return Json{{"ambient_dimension", hrep.ambient_dimension},
              {"dimension", hrep.dimension},
              {"equalities", std::move(equalities)},
              {"facets", std::move(facets)}};
}

Json to_json(const HRepCheck& check) {
  Json defining = Json::array();
  for (bool b : check.facet_defining) defining.push_back(b);
  return Json{{"sound", check.sound}, {"tightness", check.tightness}, {"facet_defining", std::move(defining)}};
}

Json to_json(const LogicBundle& bundle) {
  const Hypergraph& h = bundle.hypergraph;
  Json contexts = Json::array();
  for (const auto& c : h.contexts()) contexts.push_back(names(h, c.members));
  const auto n = h.common_context_size();
  return Json{{"name", bundle.name},
              {"aliases", bundle.aliases},
              {"vertices", h.names()},
              {"contexts", std::move(contexts)},
              {"uniformity", n ? Json(*n) : Json(nullptr)},
              {"cycle", bundle.cycle ? names(h, *bundle.cycle) : Json(nullptr)},
              {"realization", bundle.realization ? to_json(h, *bundle.realization) : Json(nullptr)}};
}

std::string export_json(const Json& value) { return value.dump(2) + "\n"; }

}  // namespace ctxlab
