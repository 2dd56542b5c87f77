#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ctxlab/hypergraph.hpp"

namespace ctxlab {

using Color = std::uint32_t;

/// Total vertex-to-color map with `k` colors available (indices 0..k-1).
struct Coloring {
  std::vector<Color> colors;  // indexed by vertex
  std::size_t k = 0;

  Color operator[](VertexId v) const { return colors.at(index(v)); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

/// Limits for exhaustive searches. `max_nodes` counts search-tree nodes.
struct SearchBudget {
  static constexpr std::uint64_t kDefaultNodes = 50'000'000;
  std::uint64_t max_nodes = kDefaultNodes;
};

struct ColoringViolation {
  enum class Kind { Repeated, Missing, Unbalanced };
  Kind kind;
  std::size_t context = 0;  // Repeated / Missing
  Color color = 0;          // the repeated, missing, or unbalanced color
  std::size_t count = 0;    // Unbalanced: size of the color class
};

struct ColoringReport {
  bool exclusive = true;
  bool complete = true;
  bool equitable = true;
  std::vector<std::size_t> class_sizes;  // indexed by color, length k
  std::vector<ColoringViolation> violations;
  bool admissible() const { return exclusive && complete; }
};

/// Throws DomainMismatch if `c` does not cover `h` or uses a color >= k.
ColoringReport check_coloring(const Hypergraph& h, const Coloring& c);

/// Relabels colors so that the first context carries 0..n-1 in member order and
/// further colors first appear in increasing order when scanning vertices by
/// index. Every color-permutation orbit has exactly one canonical member.
Coloring canonicalize(const Hypergraph& h, const Coloring& c);

/// Exhaustive search for an exclusive coloring with at most `k` colors (and
/// complete, if requested). The result is canonical. std::nullopt means the
/// search space was exhausted. Requires k >= uniformity.
std::optional<Coloring> find_coloring(const Hypergraph& h, std::size_t k, bool require_complete,
                                      const SearchBudget& budget = {});
/// Uses the default completeness requirement: true iff k equals the uniformity.
std::optional<Coloring> find_coloring(const Hypergraph& h, std::size_t k);

struct ChromaticResult {
  std::size_t chromatic_number = 0;
  std::optional<Coloring> witness;
  std::vector<std::size_t> exhausted;  // every k < chromatic_number proven infeasible
  std::size_t uniformity = 0;
};

/// Smallest k in [n, k_max] with an exclusive coloring; k_max defaults to n+3.
/// Zero contexts yield chromatic number 0. Throws ExceedsKMax.
ChromaticResult chromatic_number(const Hypergraph& h, std::optional<std::size_t> k_max = {},
                                 const SearchBudget& budget = {});

struct EnumerationLimits {
  std::size_t max_vertices = 64;
  std::size_t max_colors = 6;
  SearchBudget budget;
};

/// Calls `sink` for every exclusive coloring with colors in 0..k-1, each
/// exactly once; with `up_to_relabeling`, one canonical representative per
/// color-permutation orbit. Stops early when `sink` returns false.
/// Throws SearchBudgetExceeded, or InvalidArgument beyond `limits`.
void enumerate_colorings(const Hypergraph& h, std::size_t k, bool up_to_relabeling,
                         const std::function<bool(const Coloring&)>& sink,
                         const EnumerationLimits& limits = {});
std::vector<Coloring> enumerate_colorings(const Hypergraph& h, std::size_t k,
                                          bool up_to_relabeling,
                                          const EnumerationLimits& limits = {});

/// Canonical admissible n-colorings (exclusive + complete), one per orbit.
std::vector<Coloring> admissible_colorings(const Hypergraph& h, const SearchBudget& budget = {});

/// All relabelings of `c` obtained by injecting its used colors into 0..k-1.
std::vector<Coloring> relabelings(const Coloring& c);

/// Pairwise chromatic separation: entry [u][v] is true iff some admissible
/// coloring gives u and v different colors. Diagonal entries are false.
/// Throws NoAdmissibleColoring.
struct SeparationTable {
  std::vector<std::vector<bool>> separated;
  bool is_separated(VertexId u, VertexId v) const;  // throws InvalidArgument for u == v
  std::vector<std::pair<VertexId, VertexId>> unseparated_pairs() const;
};
SeparationTable chromatic_separation(const Hypergraph& h, const SearchBudget& budget = {});

}  // namespace ctxlab
