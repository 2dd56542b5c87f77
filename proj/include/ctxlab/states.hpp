#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ctxlab/coloring.hpp"
#include "ctxlab/hypergraph.hpp"
#include "ctxlab/rational.hpp"

namespace ctxlab {

/// Dispersion-free measure: exactly one vertex valued 1 in every context.
struct TwoValuedState {
  std::vector<std::uint8_t> values;  // indexed by vertex, each 0 or 1

  bool operator[](VertexId v) const { return values.at(index(v)) != 0; }
  std::vector<VertexId> support() const;
  friend auto operator<=>(const TwoValuedState&, const TwoValuedState&) = default;
};

/// Rational-valued state; context sums are exactly 1.
struct RationalState {
  std::vector<Rational> values;  // indexed by vertex
  friend bool operator==(const RationalState&, const RationalState&) = default;
};

/// Weight per color; the weights sum to exactly 1.
using ColorValueMap = std::vector<Rational>;

/// All two-valued states in lexicographic order of their vertex-indexed bit
/// vectors. Empty when the logic admits none.
std::vector<TwoValuedState> enumerate_states(const Hypergraph& h, const SearchBudget& budget = {});

struct StateCheck {
  bool valid = true;
  std::vector<std::size_t> ones_per_context;
  std::vector<std::size_t> bad_contexts;
};

/// Checks the one-per-context rule. Throws DomainMismatch on size mismatch or
/// values other than 0/1.
StateCheck check_state(const Hypergraph& h, std::span<const std::uint8_t> values);
/// State that is 1 exactly on `ones`.
TwoValuedState state_from_support(const Hypergraph& h, std::span<const VertexId> ones);

struct SeparatingReport {
  bool separating = true;
  std::vector<std::pair<VertexId, VertexId>> unseparated_pairs;
};

SeparatingReport separating_report(const Hypergraph& h, std::span<const TwoValuedState> states);

/// Maximum over `states` of how many members of `subset` are valued 1.
std::size_t subset_value_profile(std::span<const TwoValuedState> states,
                                 std::span<const VertexId> subset);

/// Sends `color` to 1 and every other color to 0. Throws NotAdmissible unless
/// `c` is exclusive and complete on `h`.
TwoValuedState aggregate(const Hypergraph& h, const Coloring& c, Color color);

struct AggregationWitness {
  Coloring coloring;
  Color color;
};

struct AggregabilityEntry {
  TwoValuedState state;
  std::optional<AggregationWitness> witness;
};

/// Classifies every two-valued state of `h` as aggregable (with a witness) or
/// not, by exhausting admissible colorings up to relabeling.
/// Throws NoAdmissibleColoring.
std::vector<AggregabilityEntry> aggregability_report(const Hypergraph& h,
                                                     const SearchBudget& budget = {});

/// Checks that `values` is a rational state of `h`: entries in [0,1], each
/// context summing to 1. Throws DomainMismatch on size mismatch.
bool is_rational_state(const Hypergraph& h, std::span<const Rational> values);

/// s(v) = m(c(v)). Throws NotAdmissible or ValueMapNotNormalized.
RationalState fractional_state(const Hypergraph& h, const Coloring& c, const ColorValueMap& m);

struct FractionalWitness {
  Coloring coloring;
  ColorValueMap values;
};

/// Searches for an admissible k-coloring and value map reproducing `target`.
/// k must equal the uniformity. std::nullopt after exhaustive search.
std::optional<FractionalWitness> fractional_reachable(const Hypergraph& h,
                                                      const RationalState& target, std::size_t k,
                                                      const SearchBudget& budget = {});

/// Index (in `states`) of the state vanishing on every `cycle` vertex, i.e.
/// the all-middles state of a cycle logic. Throws InvalidArgument unless
/// exactly one exists.
std::size_t middle_state_index(std::span<const TwoValuedState> states,
                               std::span<const VertexId> cycle);

}  // namespace ctxlab
