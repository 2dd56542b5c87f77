#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "ctxlab/catalog.hpp"
#include "ctxlab/coloring.hpp"
#include "ctxlab/polytope.hpp"
#include "ctxlab/realization.hpp"
#include "ctxlab/states.hpp"

namespace ctxlab {

/// Field order is insertion order so that exports are byte-stable.
using Json = nlohmann::ordered_json;

// Field names are documented in docs/format.md. Rationals are strings "p/q"
// (or "p" when integral); two-valued states are the names of their 1-valued
// vertices in vertex order.

Json to_json(const Hypergraph& h, const Coloring& c);
Json to_json(const Hypergraph& h, const ColoringReport& r);
Json to_json(const Hypergraph& h, const ChromaticResult& r);
Json to_json(const Hypergraph& h, const TwoValuedState& s);
Json to_json(const Hypergraph& h, std::span<const TwoValuedState> states);
Json to_json(const Hypergraph& h, const SeparatingReport& r);
Json to_json(const Hypergraph& h, std::span<const AggregabilityEntry> entries);
Json to_json(const Hypergraph& h, const RationalState& s);
Json to_json(const Hypergraph& h, const FractionalWitness& w);
Json to_json(const Hypergraph& h, const RealizationReport& r);
Json to_json(const Hypergraph& h, const Realization& r);
Json to_json(const Hypergraph& h, const IncidenceProfile& p);
Json to_json(const Hypergraph& h, const SeparationTable& t);
Json to_json(const LinearInequality& ineq);
Json to_json(const PolytopeHRep& hrep);
Json to_json(const HRepCheck& check);
Json to_json(const LogicBundle& bundle);

/// Pretty-printed with two-space indent and a trailing newline.
std::string export_json(const Json& value);

}  // namespace ctxlab
