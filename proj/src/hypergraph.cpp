#include "ctxlab/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "ctxlab/error.hpp"

namespace ctxlab {

bool is_valid_name(std::string_view name) noexcept {
  if (name.empty() || name.front() == '#' || name.front() == '[') return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return c > 0x20 && c < 0x7f && c != '[' && c != ']';
  });
}

Hypergraph::Hypergraph(std::vector<std::string> names, std::vector<Context> contexts)
    : names_(std::move(names)), contexts_(std::move(contexts)) {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_valid_name(names_[i])) {
      throw Error(ErrorCode::InvalidName, "invalid vertex name '" + names_[i] + "'");
    }
    if (!by_name_.emplace(names_[i], vertex_at(i)).second) {
      throw Error(ErrorCode::DuplicateDeclaration, "vertex '" + names_[i] + "' declared twice");
    }
  }

  incidence_.assign(n, {});
  std::set<std::vector<VertexId>> seen;
  for (std::size_t c = 0; c < contexts_.size(); ++c) {
    const auto& members = contexts_[c].members;
    if (members.empty()) {
      throw Error(ErrorCode::EmptyContext, "context " + std::to_string(c) + " is empty");
    }
    std::vector<VertexId> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (index(sorted[i]) >= n) {
        throw Error(ErrorCode::UnknownVertex,
                    "context " + std::to_string(c) + " references vertex index " +
                        std::to_string(index(sorted[i])));
      }
      if (i > 0 && sorted[i] == sorted[i - 1]) {
        throw Error(ErrorCode::DuplicateVertexInContext,
                    "vertex '" + names_[index(sorted[i])] + "' repeated in context " +
                        std::to_string(c));
      }
    }
    if (members.size() < 2) {
      throw Error(ErrorCode::ContextTooShort,
                  "context " + std::to_string(c) + " has fewer than two members");
    }
    if (!seen.insert(sorted).second) {
      throw Error(ErrorCode::DuplicateContext,
                  "context " + std::to_string(c) + " repeats an earlier member set");
    }
    for (VertexId v : members) incidence_[index(v)].push_back(c);
  }

  neighbors_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    if (incidence_[v].empty()) {
      throw Error(ErrorCode::IsolatedVertex, "vertex '" + names_[v] + "' is in no context");
    }
    std::vector<VertexId> adj;
    for (std::size_t c : incidence_[v]) {
      for (VertexId w : contexts_[c].members) {
        if (index(w) != v) adj.push_back(w);
      }
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    neighbors_[v] = std::move(adj);
  }
}

std::optional<VertexId> Hypergraph::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VertexId Hypergraph::vertex(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

bool Hypergraph::share_context(VertexId a, VertexId b) const {
  const auto& adj = neighbors_.at(index(a));
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<std::size_t> Hypergraph::common_context_size() const noexcept {
  if (contexts_.empty()) return std::nullopt;
  const std::size_t n = contexts_.front().size();
  for (const auto& c : contexts_) {
    if (c.size() != n) return std::nullopt;
  }
  return n;
}

std::vector<std::vector<VertexId>> Hypergraph::contexts_members() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(contexts_.size());
  for (const auto& c : contexts_) out.push_back(c.members);
  return out;
}

Hypergraph build_hypergraph(std::span<const std::vector<std::string>> contexts) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Context> built;
  built.reserve(contexts.size());
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    if (contexts[c].empty()) {
      throw Error(ErrorCode::EmptyContext, "context " + std::to_string(c) + " is empty");
    }
    Context ctx;
    for (const auto& name : contexts[c]) {
      if (!is_valid_name(name)) {
        throw Error(ErrorCode::InvalidName, "invalid vertex name '" + name + "'");
      }
      auto [it, inserted] = ids.emplace(name, vertex_at(names.size()));
      if (inserted) names.push_back(name);
      ctx.members.push_back(it->second);
    }
    built.push_back(std::move(ctx));
  }
  return Hypergraph(std::move(names), std::move(built));
}

std::size_t uniformity(const Hypergraph& h) {
  if (h.context_count() == 0) {
    throw Error(ErrorCode::NonUniform, "hypergraph has no contexts");
  }
  if (auto n = h.common_context_size()) return *n;

  // Report every context whose length differs from the most common length.
  std::unordered_map<std::size_t, std::size_t> freq;
  for (const auto& c : h.contexts()) ++freq[c.size()];
  std::size_t mode = 0, best = 0;
  for (const auto& [len, count] : freq) {
    if (count > best || (count == best && len < mode)) {
      mode = len;
      best = count;
    }
  }
  std::string offending;
  for (std::size_t i = 0; i < h.context_count(); ++i) {
    if (h.context(i).size() == mode) continue;
    if (!offending.empty()) offending += ", ";
    offending += std::to_string(i) + " (size " + std::to_string(h.context(i).size()) + ")";
  }
  throw Error(ErrorCode::NonUniform, "expected contexts of size " + std::to_string(mode) +
                                         "; offending contexts: " + offending);
}

IncidenceProfile incidence_profile(const Hypergraph& h) {
  IncidenceProfile p;
  p.degree.resize(h.vertex_count());
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    p.degree[v] = h.contexts_of(vertex_at(v)).size();
    if (p.degree[v] >= 2) p.intertwining.push_back(vertex_at(v));
  }
  return p;
}

}  // namespace ctxlab
