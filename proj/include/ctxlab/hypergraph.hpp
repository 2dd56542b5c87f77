#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctxlab {

/// Dense 0-based vertex handle. Only meaningful relative to the hypergraph that issued it.
enum class VertexId : std::uint32_t {};

constexpr std::size_t index(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr VertexId vertex_at(std::size_t i) noexcept {
  return static_cast<VertexId>(static_cast<std::uint32_t>(i));
}

/// A context (hyperedge): mutually exclusive outcomes of one maximal observable.
struct Context {
  std::vector<VertexId> members;
  std::size_t size() const noexcept { return members.size(); }
};

/// True if `name` is a nonempty run of printable, non-whitespace ASCII without
/// brackets and not starting with '#'.
bool is_valid_name(std::string_view name) noexcept;

/// Finite hypergraph of atoms and contexts. Immutable after construction.
///
/// Invariants: names unique and valid; contexts have at least two pairwise
/// distinct members; no two contexts share the same member set; every vertex
/// belongs to at least one context.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Validating constructor; throws ctxlab::Error on any invariant violation.
  Hypergraph(std::vector<std::string> names, std::vector<Context> contexts);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t context_count() const noexcept { return contexts_.size(); }

  const std::string& name(VertexId v) const { return names_.at(index(v)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Like find(), but throws UnknownVertex.
  VertexId vertex(std::string_view name) const;

  const std::vector<Context>& contexts() const noexcept { return contexts_; }
  const Context& context(std::size_t i) const { return contexts_.at(i); }

  /// Indices of the contexts containing `v`, ascending.
  std::span<const std::size_t> contexts_of(VertexId v) const { return incidence_.at(index(v)); }
  /// Vertices sharing at least one context with `v`, ascending, excluding `v`.
  std::span<const VertexId> neighbors(VertexId v) const { return neighbors_.at(index(v)); }
  bool share_context(VertexId a, VertexId b) const;

  /// The common context length, or std::nullopt if contexts differ in length
  /// or there are none.
  std::optional<std::size_t> common_context_size() const noexcept;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.names_ == b.names_ && a.contexts_members() == b.contexts_members();
  }

 private:
  std::vector<std::vector<VertexId>> contexts_members() const;

  std::vector<std::string> names_;
  std::vector<Context> contexts_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::vector<VertexId>> neighbors_;
};

/// Builds a hypergraph from named contexts. Vertices are indexed in order of
/// first appearance.
Hypergraph build_hypergraph(std::span<const std::vector<std::string>> contexts);

/// Returns the uniformity n; throws NonUniform listing the offending contexts.
std::size_t uniformity(const Hypergraph& h);

struct IncidenceProfile {
  std::vector<std::size_t> degree;          // indexed by vertex
  std::vector<VertexId> intertwining;       // degree >= 2, ascending
};

IncidenceProfile incidence_profile(const Hypergraph& h);

}  // namespace ctxlab
