#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include "ctxlab/catalog.hpp"
#include "ctxlab/coloring.hpp"
#include "ctxlab/dsl.hpp"
#include "ctxlab/error.hpp"
#include "ctxlab/json_export.hpp"
#include "ctxlab/polytope.hpp"
#include "ctxlab/realization.hpp"
#include "ctxlab/states.hpp"

namespace ctxlab::cli {

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string catalog_name;
  bool json = false;
  bool strict = false;
};

void add_input_options(CLI::App* sub, InputOptions& in) {
  sub->add_option("input", in.path, "logic file, or - for standard input");
  sub->add_option("--catalog", in.catalog_name, "built-in logic name");
  sub->add_flag("--json", in.json, "emit JSON");
  sub->add_flag("--strict", in.strict, "reject implicitly declared vertices");
}

LogicBundle load(const InputOptions& opts, std::istream& in) {
  const bool has_path = !opts.path.empty();
  const bool has_catalog = !opts.catalog_name.empty();
  if (has_path == has_catalog) {
    throw UsageError("exactly one input is required: a file, '-', or --catalog NAME");
  }
  if (has_catalog) return catalog(opts.catalog_name);

  std::string text;
  std::string name = opts.path;
  if (opts.path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    name = "stdin";
  } else {
    std::ifstream file(opts.path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + opts.path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  ParseOptions po;
  po.strict = opts.strict;
  po.name = name;
  return parse_logic(text, po);
}

SearchBudget budget_from_env() {
  SearchBudget b;
  if (const char* env = std::getenv("CTXLAB_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      b.max_nodes = v;
    } catch (const std::exception&) {
      throw UsageError("CTXLAB_BUDGET must be a positive integer");
    }
  }
  return b;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<VertexId> vertex_list(const Hypergraph& h, const std::string& csv) {
  std::vector<VertexId> out;
  for (const auto& name : split(csv, ',')) out.push_back(h.vertex(name));
  return out;
}

std::string join_names(const Hypergraph& h, std::span<const VertexId> vs) {
  std::string s;
  for (VertexId v : vs) s += (s.empty() ? "" : " ") + h.name(v);
  return s;
}

std::string format_coloring(const Hypergraph& h, const Coloring& c) {
  std::string s;
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    s += (v ? " " : "") + h.name(vertex_at(v)) + "=" + std::to_string(c.colors[v]);
  }
  return s;
}

std::string format_state(const Hypergraph& h, const TwoValuedState& s) {
  return "{" + join_names(h, s.support()) + "}";
}

Json header(const char* command, const LogicBundle& b) {
  return Json{{"command", command}, {"logic", b.name}};
}

void emit_json(std::ostream& out, const Json& j) { out << export_json(j); }

int cmd_validate(const LogicBundle& b, bool json, std::ostream& out) {
  const Hypergraph& h = b.hypergraph;
  std::optional<std::size_t> n;
  std::string nonuniform;
  try {
    n = uniformity(h);
  } catch (const Error& e) {
    nonuniform = e.what();
  }
  const auto profile = incidence_profile(h);
  if (json) {
    Json j = header("validate", b);
    j["vertices"] = h.vertex_count();
    j["contexts"] = h.context_count();
    j["uniformity"] = n ? Json(*n) : Json(nullptr);
    j["nonuniform"] = nonuniform.empty() ? Json(nullptr) : Json(nonuniform);
    j["incidence"] = to_json(h, profile);
    j["rays"] = b.realization ? Json(b.realization->covered()) : Json(0);
    emit_json(out, j);
  } else {
    out << "logic: " << b.name << "\n";
    out << "vertices: " << h.vertex_count() << "\n";
    out << "contexts: " << h.context_count() << "\n";
    out << "uniformity: " << (n ? std::to_string(*n) : "none (" + nonuniform + ")") << "\n";
    out << "intertwining: " << profile.intertwining.size() << " ["
        << join_names(h, profile.intertwining) << "]\n";
    out << "degrees:";
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      out << " " << h.name(vertex_at(v)) << ":" << profile.degree[v];
    }
    out << "\n";
    if (b.realization) {
      out << "rays: " << b.realization->covered() << "/" << h.vertex_count() << " in dimension "
          << b.realization->dimension << "\n";
    }
  }
  return n ? kOk : kAssertionFailed;
}

struct ChromaOptions {
  std::optional<std::size_t> max_k;
  bool enumerate = false;
  bool require_admissible = false;
};

int cmd_chroma(const LogicBundle& b, const ChromaOptions& o, bool json, std::ostream& out) {
  const Hypergraph& h = b.hypergraph;
  const auto budget = budget_from_env();
  const auto result = chromatic_number(h, o.max_k, budget);
  const bool admissible = result.chromatic_number != 0 && result.chromatic_number == result.uniformity;
  std::vector<Coloring> all;
  if (o.enumerate && result.chromatic_number > 0) {
    EnumerationLimits limits;
    limits.budget = budget;
    all = enumerate_colorings(h, result.chromatic_number, true, limits);
  }
  if (json) {
    Json j = header("chroma", b);
    const Json payload = to_json(h, result);
    for (const auto& [key, value] : payload.items()) j[key] = value;
    j["admissible"] = admissible;
    if (o.enumerate) {
      Json arr = Json::array();
      for (const auto& c : all) arr.push_back(to_json(h, c));
      j["colorings"] = std::move(arr);
    }
    emit_json(out, j);
  } else {
    out << "chromatic number: " << result.chromatic_number << "\n";
    out << "uniformity: " << result.uniformity << "\n";
    for (auto k : result.exhausted) out << "no exclusive coloring with " << k << " colors (exhaustive)\n";
    if (result.witness) out << "witness: " << format_coloring(h, *result.witness) << "\n";
    out << "admissible coloring: " << (admissible ? "yes" : "no") << "\n";
    if (o.enumerate) {
      out << "colorings up to relabeling: " << all.size() << "\n";
      for (std::size_t i = 0; i < all.size(); ++i) {
        out << "  #" << i << ": " << format_coloring(h, all[i]) << "\n";
      }
    }
  }
  return o.require_admissible && !admissible ? kAssertionFailed : kOk;
}

struct StatesOptions {
  bool separating = false;
  std::string at_most_one;
};

int cmd_states(const LogicBundle& b, const StatesOptions& o, bool json, std::ostream& out) {
  const Hypergraph& h = b.hypergraph;
  const auto states = enumerate_states(h, budget_from_env());
  int code = kOk;
  std::optional<SeparatingReport> sep;
  if (o.separating) {
    sep = separating_report(h, states);
    if (!sep->separating) code = kAssertionFailed;
  }
  std::vector<VertexId> subset;
  std::optional<std::size_t> profile;
  if (!o.at_most_one.empty()) {
    subset = vertex_list(h, o.at_most_one);
    profile = subset_value_profile(states, subset);
    if (*profile > 1) code = kAssertionFailed;
  }
  if (json) {
    Json j = header("states", b);
    j["count"] = states.size();
    j["states"] = to_json(h, std::span<const TwoValuedState>(states));
    if (sep) j["separating"] = to_json(h, *sep);
    if (profile) {
      std::vector<std::string> names;
      for (VertexId v : subset) names.push_back(h.name(v));
      j["at_most_one"] = Json{{"subset", names}, {"max", *profile}, {"holds", *profile <= 1}};
    }
    emit_json(out, j);
  } else {
    out << "two-valued states: " << states.size() << "\n";
    for (std::size_t i = 0; i < states.size(); ++i) out << "  #" << i << ": " << format_state(h, states[i]) << "\n";
    if (sep) {
      out << "separating: " << (sep->separating ? "yes" : "no") << "\n";
      for (auto [u, v] : sep->unseparated_pairs) out << "  unseparated: " << h.name(u) << " " << h.name(v) << "\n";
    }
    if (profile) {
      out << "max simultaneous 1s on {" << join_names(h, subset) << "}: " << *profile
          << (*profile <= 1 ? " (at most one holds)" : " (at most one fails)") << "\n";
    }
  }
  return code;
}

int cmd_aggregate(const LogicBundle& b, bool report, bool json, std::ostream& out) {
  const Hypergraph& h = b.hypergraph;
  const auto entries = aggregability_report(h, budget_from_env());
  const auto aggregable = static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.witness.has_value(); }));
  if (json) {
    Json j = header("aggregate", b);
    j["aggregable"] = aggregable;
    j["non_aggregable"] = entries.size() - aggregable;
    j["states"] = to_json(h, std::span<const AggregabilityEntry>(entries));
    emit_json(out, j);
    return kOk;
  }
  out << "two-valued states: " << entries.size() << "\n";
  out << "aggregable: " << aggregable << "\n";
  out << "non-aggregable: " << entries.size() - aggregable << "\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!report && e.witness) continue;
    out << "  #" << i << ": " << format_state(h, e.state);
    if (e.witness) {
      out << " <- color " << e.witness->color << " of " << format_coloring(h, e.witness->coloring);
    } else {
      out << " not aggregable";
    }
    out << "\n";
  }
  return kOk;
}

struct FractionalOptions {
  std::string values;
  std::string target;
  std::size_t coloring = 0;
};

RationalState read_target(const Hypergraph& h, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  RationalState s;
  s.values.assign(h.vertex_count(), 0);
  std::vector<bool> seen(h.vertex_count(), false);
  std::string line;
  while (std::getline(file, line)) {
    line = line.substr(0, line.find('#'));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream is(line);
    std::string item;
    while (is >> item) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("target entry '" + item + "' is not name=value");
      const VertexId v = h.vertex(item.substr(0, eq));
      auto q = parse_rational(item.substr(eq + 1));
      if (!q) throw UsageError("bad value in target entry '" + item + "'");
      s.values[index(v)] = *q;
      seen[index(v)] = true;
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw UsageError("target misses vertex '" + h.name(vertex_at(v)) + "'");
  }
  return s;
}

int cmd_fractional(const LogicBundle& b, const FractionalOptions& o, bool json, std::ostream& out) {
  const Hypergraph& h = b.hypergraph;
  const auto budget = budget_from_env();
  if (o.values.empty() == o.target.empty()) throw UsageError("give exactly one of --values or --target");

  if (!o.values.empty()) {
    const auto colorings = admissible_colorings(h, budget);
    if (colorings.empty()) throw Error(ErrorCode::NoAdmissibleColoring, "no admissible coloring");
    if (o.coloring >= colorings.size()) {
      throw UsageError("--coloring must be below " + std::to_string(colorings.size()));
    }
    const Coloring& c = colorings[o.coloring];
    ColorValueMap m(c.k, 0);
    for (const auto& item : split(o.values, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--values entry '" + item + "' is not color=value");
      std::size_t color = 0;
      try {
        color = std::stoul(item.substr(0, eq));
      } catch (const std::exception&) {
        throw UsageError("bad color in '" + item + "'");
      }
      auto q = parse_rational(item.substr(eq + 1));
      if (!q || color >= c.k) throw UsageError("bad --values entry '" + item + "'");
      m[color] = *q;
    }
    const auto state = fractional_state(h, c, m);
    if (json) {
      Json j = header("fractional", b);
      j["coloring"] = to_json(h, c);
      Json values = Json::array();
      for (const auto& q : m) values.push_back(to_string(q));
      j["values"] = std::move(values);
      j["state"] = to_json(h, state);
      emit_json(out, j);
    } else {
      out << "coloring #" << o.coloring << ": " << format_coloring(h, c) << "\n";
      out << "state:";
      for (std::size_t v = 0; v < state.values.size(); ++v) {
        out << " " << h.name(vertex_at(v)) << "=" << to_string(state.values[v]);
      }
      out << "\n";
    }
    return kOk;
  }

  const auto target = read_target(h, o.target);
  if (!is_rational_state(h, target.values)) {
    throw UsageError("target is not a rational state (values in [0,1], contexts summing to 1)");
  }
  const std::size_t n = uniformity(h);
  const auto witness = fractional_reachable(h, target, n, budget);
  if (json) {
    Json j = header("fractional", b);
    j["target"] = to_json(h, target);
    j["reachable"] = witness.has_value();
    j["witness"] = witness ? to_json(h, *witness) : Json(nullptr);
    emit_json(out, j);
  } else if (witness) {
    out << "reachable: yes\n";
    out << "coloring: " << format_coloring(h, witness->coloring) << "\n";
    out << "values:";
    for (std::size_t c = 0; c < witness->values.size(); ++c) out << " " << c << "=" << to_string(witness->values[c]);
    out << "\n";
  } else {
    out << "reachable: no (exhaustive over admissible " << n << "-colorings)\n";
  }
  return kOk;
}

int cmd_verify(const LogicBundle& b, bool faithful, bool json, std::ostream& out) {
  const Hypergraph& h = b.hypergraph;
  if (!b.realization) throw UsageError("input has no realization (no vertex rays)");
  const auto r = verify_realization(h, *b.realization, faithful);
  if (json) {
    Json j = header("verify-realization", b);
    const Json payload = to_json(h, r);
    for (const auto& [key, value] : payload.items()) j[key] = value;
    emit_json(out, j);
  } else {
    out << "contexts: " << h.context_count() - std::min(h.context_count(), r.context_violations.size())
        << "/" << h.context_count() << " orthogonal bases\n";
    for (const auto& v : r.context_violations) {
      out << "  context " << v.context << ": " << v.reason;
      if (v.pair) out << " (" << h.name(v.pair->first) << ", " << h.name(v.pair->second) << ")";
      out << "\n";
    }
    for (auto [u, v] : r.duplicate_rays) out << "  duplicate ray: " << h.name(u) << " " << h.name(v) << "\n";
    if (faithful) {
      out << "faithful: " << (r.faithful() ? "yes" : "no") << "\n";
      for (auto [u, v] : r.unexpected_orthogonal) {
        out << "  orthogonal without shared context: " << h.name(u) << " " << h.name(v) << "\n";
      }
    }
    out << "result: " << (r.ok() ? "pass" : "fail") << "\n";
  }
  return r.ok() ? kOk : kAssertionFailed;
}

struct HullOptions {
  std::string coords;
  std::string filter = "all";
  std::string method = "dd";
};

CoordinateSpec parse_coords(const Hypergraph& h, const std::string& text, std::vector<std::string>& labels) {
  if (text.rfind("probs:", 0) == 0) {
    auto vs = vertex_list(h, text.substr(6));
    if (vs.empty()) throw UsageError("probs: needs at least one vertex");
    for (VertexId v : vs) labels.push_back("p(" + h.name(v) + ")");
    return CoordinateSpec::probabilities(std::move(vs));
  }
  if (text.rfind("pairs:", 0) == 0) {
    const std::string body = text.substr(6);
    static const std::regex pair_re(R"(\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\))");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::string rest;
    auto last = body.cbegin();
    for (std::sregex_iterator it(body.begin(), body.end(), pair_re), end; it != end; ++it) {
      rest.append(last, body.cbegin() + it->position());
      last = body.cbegin() + it->position() + it->length();
      pairs.emplace_back(h.vertex((*it)[1].str()), h.vertex((*it)[2].str()));
      labels.push_back("A(" + (*it)[1].str() + "," + (*it)[2].str() + ")");
    }
    rest.append(last, body.cend());
    if (pairs.empty() || rest.find_first_not_of(", ") != std::string::npos) {
      throw UsageError("malformed pairs: expected (u,v),(u,v),...");
    }
    return CoordinateSpec::pair_products(std::move(pairs));
  }
  throw UsageError("--coords must start with pairs: or probs:");
}

std::string format_inequality(const LinearInequality& f, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < f.normal.size(); ++i) {
    const Integer& a = f.normal[i];
    if (a == 0) continue;
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    const Integer mag = abs(a);
    if (mag != 1) s += mag.get_str() + "*";
    s += labels[i];
  }
  if (s.empty()) s = "0";
  return s + (f.sense == LinearInequality::Sense::eq ? " = " : " >= ") + f.bound.get_str();
}

int cmd_hull(const LogicBundle& b, const HullOptions& o, bool json, std::ostream& out) {
  const Hypergraph& h = b.hypergraph;
  const auto budget = budget_from_env();
  if (o.coords.empty()) throw UsageError("--coords is required");
  std::vector<std::string> labels;
  const auto spec = parse_coords(h, o.coords, labels);

  const auto states = enumerate_states(h, budget);
  std::vector<std::size_t> used;
  if (o.filter == "all") {
    for (std::size_t i = 0; i < states.size(); ++i) used.push_back(i);
  } else if (o.filter == "aggregable") {
    const auto entries = aggregability_report(h, budget);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].witness) used.push_back(i);
    }
  } else if (o.filter.rfind("exclude:", 0) == 0) {
    std::vector<bool> drop(states.size(), false);
    for (const auto& id : split(o.filter.substr(8), ',')) {
      if (id == "middle") {
        if (!b.cycle) throw UsageError("'middle' needs cycle metadata");
        drop[middle_state_index(states, *b.cycle)] = true;
        continue;
      }
      std::size_t i = 0;
      try {
        std::size_t pos = 0;
        i = std::stoul(id, &pos);
        if (pos != id.size()) throw std::invalid_argument(id);
      } catch (const std::exception&) {
        throw UsageError("bad state id '" + id + "'");
      }
      if (i >= states.size()) throw UsageError("state id " + id + " out of range");
      drop[i] = true;
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (!drop[i]) used.push_back(i);
    }
  } else {
    throw UsageError("--filter must be all, aggregable, or exclude:ID,...");
  }
  if (used.empty()) throw UsageError("no states left after filtering");

  std::vector<TwoValuedState> selected;
  for (auto i : used) selected.push_back(states[i]);
  const auto points = evaluate_coordinates(h, selected, spec);

  FacetOptions fo;
  if (o.method == "dd") {
    fo.method = FacetMethod::double_description;
  } else if (o.method == "brute") {
    fo.method = FacetMethod::brute_force;
  } else {
    throw UsageError("--method must be dd or brute");
  }
  const auto hrep = facet_enumeration(points.points, fo);
  const auto check = verify_hrep(points.points, hrep);

  if (json) {
    Json j = header("hull", b);
    j["coordinates"] = Json{{"kind", spec.kind == CoordinateSpec::Kind::probability ? "probability" : "pair_product"},
                            {"labels", labels}};
    j["filter"] = o.filter;
    j["states_used"] = used;
    Json pts = Json::array();
    for (const auto& p : points.points) {
      Json row = Json::array();
      for (const auto& q : p) row.push_back(to_string(q));
      pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    j["hull"] = to_json(hrep);
    j["check"] = to_json(check);
    emit_json(out, j);
  } else {
    out << "states used: " << used.size() << " of " << states.size() << "\n";
    out << "distinct points: " << points.points.size() << "\n";
    out << "affine dimension: " << hrep.dimension << " (ambient " << hrep.ambient_dimension << ")\n";
    out << "equalities: " << hrep.equalities.size() << "\n";
    for (const auto& e : hrep.equalities) out << "  " << format_inequality(e, labels) << "\n";
    out << "facets: " << hrep.facets.size() << "\n";
    for (std::size_t i = 0; i < hrep.facets.size(); ++i) {
      out << "  " << format_inequality(hrep.facets[i], labels) << "   [tight: " << check.tightness[i] << "]\n";
    }
    out << "sound: " << (check.sound ? "yes" : "no") << "\n";
  }
  return check.sound ? kOk : kAssertionFailed;
}

int cmd_catalog(const std::vector<std::string>& args, bool json, std::ostream& out) {
  if (args.empty()) throw UsageError("catalog needs 'list' or 'show NAME'");
  if (args[0] == "list" && args.size() == 1) {
    if (json) {
      Json arr = Json::array();
      for (const auto& name : catalog_names()) {
        const auto b = catalog(name);
        arr.push_back(Json{{"name", b.name},
                           {"aliases", b.aliases},
                           {"vertices", b.hypergraph.vertex_count()},
                           {"contexts", b.hypergraph.context_count()}});
      }
      emit_json(out, Json{{"command", "catalog"}, {"entries", std::move(arr)}});
    } else {
      for (const auto& name : catalog_names()) {
        const auto b = catalog(name);
        out << b.name;
        for (const auto& a : b.aliases) out << " " << a;
        out << "  (" << b.hypergraph.vertex_count() << " vertices, " << b.hypergraph.context_count()
            << " contexts)\n";
      }
    }
    return kOk;
  }
  if (args[0] == "show" && args.size() == 2) {
    const auto b = catalog(args[1]);
    if (json) {
      Json j{{"command", "catalog"}};
      j["bundle"] = to_json(b);
      emit_json(out, j);
    } else {
      out << serialize_logic(b);
    }
    return kOk;
  }
  throw UsageError("catalog needs 'list' or 'show NAME'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze finite quantum-logic hypergraphs", "ctxlab"};
  app.require_subcommand(1);

  InputOptions input;
  auto* validate = app.add_subcommand("validate", "structure and uniformity report");
  add_input_options(validate, input);

  ChromaOptions chroma_opts;
  auto* chroma = app.add_subcommand("chroma", "chromatic number with certificate");
  add_input_options(chroma, input);
  chroma->add_option("--max-k", chroma_opts.max_k, "largest color count to try");
  chroma->add_flag("--enumerate", chroma_opts.enumerate, "list colorings at the chromatic number");
  chroma->add_flag("--require-admissible", chroma_opts.require_admissible,
                   "exit 1 unless the chromatic number equals the uniformity");

  StatesOptions states_opts;
  auto* states = app.add_subcommand("states", "enumerate two-valued states");
  add_input_options(states, input);
  states->add_flag("--separating", states_opts.separating, "check the states separate all vertices");
  states->add_option("--at-most-one", states_opts.at_most_one, "comma-separated vertices; check at most one is 1");

  bool report = false;
  auto* aggregate_cmd = app.add_subcommand("aggregate", "classify states as aggregable or not");
  add_input_options(aggregate_cmd, input);
  aggregate_cmd->add_flag("--report", report, "list every state with its witness");

  FractionalOptions frac_opts;
  auto* fractional = app.add_subcommand("fractional", "fractional states from colorings");
  add_input_options(fractional, input);
  fractional->add_option("--values", frac_opts.values, "color=value,... applied to an admissible coloring");
  fractional->add_option("--coloring", frac_opts.coloring, "index of the admissible coloring (default 0)");
  fractional->add_option("--target", frac_opts.target, "file of name=value entries to reach");

  bool faithful = false;
  auto* verify = app.add_subcommand("verify-realization", "exact orthogonality check of vertex rays");
  add_input_options(verify, input);
  verify->add_flag("--faithful", faithful, "also report orthogonal pairs sharing no context");

  HullOptions hull_opts;
  auto* hull = app.add_subcommand("hull", "facets of the correlation polytope");
  add_input_options(hull, input);
  hull->add_option("--coords", hull_opts.coords, "pairs:(u,v),... or probs:v1,v2,...");
  hull->add_option("--filter", hull_opts.filter, "all | aggregable | exclude:ID,... (ID or 'middle')");
  hull->add_option("--method", hull_opts.method, "dd (default) or brute");

  std::vector<std::string> catalog_args;
  bool catalog_json = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "built-in logics: list | show NAME");
  catalog_cmd->add_option("args", catalog_args, "list | show NAME");
  catalog_cmd->add_flag("--json", catalog_json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(catalog_args, catalog_json, out);
    const LogicBundle bundle = load(input, in);
    if (validate->parsed()) return cmd_validate(bundle, input.json, out);
    if (chroma->parsed()) return cmd_chroma(bundle, chroma_opts, input.json, out);
    if (states->parsed()) return cmd_states(bundle, states_opts, input.json, out);
    if (aggregate_cmd->parsed()) return cmd_aggregate(bundle, report, input.json, out);
    if (fractional->parsed()) return cmd_fractional(bundle, frac_opts, input.json, out);
    if (verify->parsed()) return cmd_verify(bundle, faithful, input.json, out);
    if (hull->parsed()) return cmd_hull(bundle, hull_opts, input.json, out);
  } catch (const UsageError& e) {
    err << "ctxlab: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "ctxlab: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ctxlab::cli
