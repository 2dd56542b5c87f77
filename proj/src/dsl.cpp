#include "ctxlab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "ctxlab/error.hpp"

namespace ctxlab {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits on whitespace; '[' and ']' are tokens of their own; '#' starts a
// comment running to the end of the line.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (c == '[' || c == ']') {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '[' && line[i] != ']' && line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const ParseOptions& options) : options_(options) {}

  LogicBundle parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      parse_line(line_no, line);
      pos = end + 1;
    }
    return finish();
  }

 private:
  struct Declared {
    std::optional<Ray> ray;
    std::size_t line;
    std::size_t column;
  };

  [[noreturn]] void fail(ErrorCode code, std::size_t line, std::size_t column,
                         const std::string& message) const {
    throw ParseError(code, line, column, message);
  }

  void parse_line(std::size_t line_no, std::string_view line) {
    for (unsigned char c : line) {
      if (c < 0x20 && c != '\t') fail(ErrorCode::SyntaxError, line_no, 1, "control character");
      if (c >= 0x7f) fail(ErrorCode::SyntaxError, line_no, 1, "non-ASCII character");
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) return;
    const auto& head = tokens.front();
    if (head.text == "dim") {
      parse_dim(line_no, tokens);
    } else if (head.text == "vertex") {
      parse_vertex(line_no, tokens);
    } else if (head.text == "context") {
      parse_context(line_no, tokens);
    } else if (head.text == "cycle") {
      parse_cycle(line_no, tokens);
    } else {
      fail(ErrorCode::UnknownDirective, line_no, head.column,
           "unknown directive '" + std::string(head.text) + "'");
    }
  }

  void parse_dim(std::size_t line_no, const std::vector<Token>& t) {
    if (dim_declared_) fail(ErrorCode::DuplicateDeclaration, line_no, t[0].column, "dim declared twice");
    if (t.size() != 2) fail(ErrorCode::SyntaxError, line_no, t[0].column, "expected 'dim <n>'");
    const auto& arg = t[1].text;
    if (arg.empty() || arg.size() > 6 ||
        !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail(ErrorCode::SyntaxError, line_no, t[1].column, "dimension must be a positive integer");
    }
    const std::size_t n = std::stoul(std::string(arg));
    if (n == 0) fail(ErrorCode::SyntaxError, line_no, t[1].column, "dimension must be positive");
    if (dimension_ && *dimension_ != n) {
      fail(ErrorCode::DimensionMismatch, line_no, t[1].column,
           "dim " + std::to_string(n) + " conflicts with earlier rays of length " +
               std::to_string(*dimension_));
    }
    dimension_ = n;
    dim_declared_ = true;
  }

  void check_name(std::size_t line_no, const Token& tok) const {
    if (!is_valid_name(tok.text)) {
      fail(ErrorCode::SyntaxError, line_no, tok.column, "invalid vertex name '" + std::string(tok.text) + "'");
    }
  }

  std::size_t declare(std::string_view name, std::size_t line_no, std::size_t column) {
    auto [it, inserted] = ids_.emplace(std::string(name), names_.size());
    if (inserted) {
      names_.emplace_back(name);
      decls_.push_back({std::nullopt, line_no, column});
    }
    return it->second;
  }

  void parse_vertex(std::size_t line_no, const std::vector<Token>& t) {
    if (t.size() < 2) fail(ErrorCode::SyntaxError, line_no, t[0].column, "expected 'vertex <name>'");
    check_name(line_no, t[1]);
    if (ids_.count(std::string(t[1].text))) {
      fail(ErrorCode::DuplicateDeclaration, line_no, t[1].column,
           "vertex '" + std::string(t[1].text) + "' already declared");
    }
    const std::size_t id = declare(t[1].text, line_no, t[1].column);
    if (t.size() == 2) return;

    if (t[2].text != "[") fail(ErrorCode::SyntaxError, line_no, t[2].column, "expected '['");
    std::vector<Rational> coords;
    std::size_t i = 3;
    for (; i < t.size() && t[i].text != "]"; ++i) {
      auto q = parse_rational(t[i].text);
      if (!q) fail(ErrorCode::SyntaxError, line_no, t[i].column, "bad number '" + std::string(t[i].text) + "'");
      coords.push_back(std::move(*q));
    }
    if (i == t.size()) fail(ErrorCode::SyntaxError, line_no, t.back().column, "missing ']'");
    if (i + 1 != t.size()) fail(ErrorCode::SyntaxError, line_no, t[i + 1].column, "trailing tokens after ray");
    if (coords.empty()) fail(ErrorCode::SyntaxError, line_no, t[2].column, "empty ray");
    if (dimension_ && *dimension_ != coords.size()) {
      fail(ErrorCode::DimensionMismatch, line_no, t[2].column,
           "ray has " + std::to_string(coords.size()) + " entries, expected " + std::to_string(*dimension_));
    }
    dimension_ = coords.size();
    try {
      decls_[id].ray = Ray(std::span<const Rational>(coords));
    } catch (const Error& e) {
      fail(e.code(), line_no, t[2].column, "ray must be nonzero");
    }
  }

  std::vector<std::size_t> resolve_names(std::size_t line_no, const std::vector<Token>& t, bool allow_implicit) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 1; i < t.size(); ++i) {
      check_name(line_no, t[i]);
      auto it = ids_.find(std::string(t[i].text));
      if (it == ids_.end()) {
        if (!allow_implicit) {
          fail(ErrorCode::UnknownVertex, line_no, t[i].column,
               "undeclared vertex '" + std::string(t[i].text) + "'");
        }
        ids.push_back(declare(t[i].text, line_no, t[i].column));
      } else {
        ids.push_back(it->second);
      }
    }
    return ids;
  }

  void parse_context(std::size_t line_no, const std::vector<Token>& t) {
    if (t.size() < 2) fail(ErrorCode::SyntaxError, line_no, t[0].column, "empty context");
    std::set<std::string_view> seen;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!seen.insert(t[i].text).second) {
        fail(ErrorCode::DuplicateVertexInContext, line_no, t[i].column,
             "vertex '" + std::string(t[i].text) + "' repeated in context");
      }
    }
    if (t.size() < 3) fail(ErrorCode::ContextTooShort, line_no, t[0].column, "context needs two members");
    const auto ids = resolve_names(line_no, t, !options_.strict);
    std::vector<std::size_t> key = ids;
    std::sort(key.begin(), key.end());
    if (!context_keys_.insert(key).second) {
      fail(ErrorCode::DuplicateContext, line_no, t[0].column, "context repeats an earlier member set");
    }
    contexts_.push_back(ids);
  }

  void parse_cycle(std::size_t line_no, const std::vector<Token>& t) {
    if (cycle_) fail(ErrorCode::DuplicateDeclaration, line_no, t[0].column, "cycle declared twice");
    if (t.size() < 2) fail(ErrorCode::SyntaxError, line_no, t[0].column, "empty cycle");
    cycle_line_ = line_no;
    cycle_.emplace();
    for (std::size_t i = 1; i < t.size(); ++i) {
      check_name(line_no, t[i]);
      cycle_->push_back(t[i]);
    }
  }

  LogicBundle finish() {
    std::vector<std::size_t> degree(names_.size(), 0);
    for (const auto& c : contexts_) {
      for (auto id : c) ++degree[id];
    }
    for (std::size_t v = 0; v < names_.size(); ++v) {
      if (degree[v] == 0) {
        fail(ErrorCode::IsolatedVertex, decls_[v].line, decls_[v].column,
             "vertex '" + names_[v] + "' is in no context");
      }
    }

    std::vector<Context> contexts;
    for (const auto& c : contexts_) {
      Context ctx;
      for (auto id : c) ctx.members.push_back(vertex_at(id));
      contexts.push_back(std::move(ctx));
    }
    LogicBundle bundle{Hypergraph(names_, std::move(contexts)), std::nullopt, options_.name, {}, std::nullopt, {}};

    const bool any_ray = std::any_of(decls_.begin(), decls_.end(), [](const Declared& d) { return d.ray.has_value(); });
    if (any_ray || dim_declared_) {
      Realization r;
      r.dimension = dimension_.value_or(0);
      for (const auto& d : decls_) r.rays.push_back(d.ray);
      bundle.realization = std::move(r);
    }

    if (cycle_) {
      std::vector<VertexId> cycle;
      for (const auto& tok : *cycle_) {
        auto it = ids_.find(std::string(tok.text));
        if (it == ids_.end()) {
          fail(ErrorCode::UnknownVertex, cycle_line_, tok.column, "cycle names unknown vertex '" + std::string(tok.text) + "'");
        }
        if (degree[it->second] < 2) {
          fail(ErrorCode::SyntaxError, cycle_line_, tok.column,
               "cycle vertex '" + std::string(tok.text) + "' is not intertwining");
        }
        cycle.push_back(vertex_at(it->second));
      }
      bundle.cycle = std::move(cycle);
    }
    return bundle;
  }

  const ParseOptions& options_;
  std::optional<std::size_t> dimension_;
  bool dim_declared_ = false;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> ids_;
  std::vector<Declared> decls_;
  std::vector<std::vector<std::size_t>> contexts_;
  std::set<std::vector<std::size_t>> context_keys_;
  std::optional<std::vector<Token>> cycle_;
  std::size_t cycle_line_ = 0;
};

}  // namespace

LogicBundle parse_logic(std::string_view text, const ParseOptions& options) {
  return Parser(options).parse(text);
}

std::string serialize_logic(const LogicBundle& bundle) {
  const Hypergraph& h = bundle.hypergraph;
  std::ostringstream out;
  out << "# logic: " << bundle.name << "\n";
  if (!bundle.aliases.empty()) {
    out << "# aliases:";
    for (const auto& a : bundle.aliases) out << " " << a;
    out << "\n";
  }
  out << "# " << h.vertex_count() << (h.vertex_count() == 1 ? " vertex, " : " vertices, ")
      << h.context_count() << (h.context_count() == 1 ? " context" : " contexts") << "\n";

  // Vertex lines are needed for rays, or when declaration order differs from
  // order of first appearance in the contexts.
  bool first_appearance_order = true;
  {
    std::size_t next = 0;
    for (const auto& c : h.contexts()) {
      for (VertexId v : c.members) {
        if (index(v) == next) {
          ++next;
        } else if (index(v) > next) {
          first_appearance_order = false;
        }
      }
    }
  }

  if (bundle.realization) out << "dim " << bundle.realization->dimension << "\n";
  if (bundle.realization || !first_appearance_order) {
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      out << "vertex " << h.name(vertex_at(v));
      if (bundle.realization && v < bundle.realization->rays.size() && bundle.realization->rays[v]) {
        out << " [";
        const auto& coords = bundle.realization->rays[v]->coords();
        for (std::size_t i = 0; i < coords.size(); ++i) out << (i ? " " : "") << coords[i].get_str();
        out << "]";
      }
      out << "\n";
    }
  }
  for (const auto& c : h.contexts()) {
    out << "context";
    for (VertexId v : c.members) out << " " << h.name(v);
    out << "\n";
  }
  if (bundle.cycle) {
    out << "cycle";
    for (VertexId v : *bundle.cycle) out << " " << h.name(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace ctxlab
