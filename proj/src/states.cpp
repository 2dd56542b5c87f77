#include "ctxlab/states.hpp"

#include <algorithm>
#include <map>

#include "ctxlab/error.hpp"

namespace ctxlab {

namespace {

constexpr std::int8_t kOpen = -1;

// Picks the 1-vertex of one unsatisfied context at a time (the one with the
// fewest open members) and propagates zeros to every vertex sharing a context
// with it.
class StateSearch {
 public:
  StateSearch(const Hypergraph& h, std::uint64_t max_nodes)
      : h_(h), max_nodes_(max_nodes), value_(h.vertex_count(), kOpen),
        satisfied_(h.context_count(), false) {}

  std::vector<TwoValuedState> run() {
    descend();
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void descend() {
    if (++nodes_ > max_nodes_) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "state search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    std::size_t pick = h_.context_count();
    std::size_t fewest = static_cast<std::size_t>(-1);
    for (std::size_t c = 0; c < h_.context_count(); ++c) {
      if (satisfied_[c]) continue;
      std::size_t open = 0;
      for (VertexId v : h_.context(c).members) open += value_[index(v)] == kOpen;
      if (open == 0) return;
      if (open < fewest) {
        fewest = open;
        pick = c;
      }
    }
    if (pick == h_.context_count()) {
      TwoValuedState s;
      s.values.reserve(value_.size());
      for (auto x : value_) s.values.push_back(x == 1 ? 1 : 0);
      out_.push_back(std::move(s));
      return;
    }

    for (VertexId v : h_.context(pick).members) {
      if (value_[index(v)] != kOpen) continue;
      std::vector<VertexId> zeroed;
      std::vector<std::size_t> newly_satisfied;
      value_[index(v)] = 1;
      for (VertexId w : h_.neighbors(v)) {
        if (value_[index(w)] == kOpen) {
          value_[index(w)] = 0;
          zeroed.push_back(w);
        }
      }
      for (std::size_t c : h_.contexts_of(v)) {
        if (!satisfied_[c]) {
          satisfied_[c] = true;
          newly_satisfied.push_back(c);
        }
      }
      descend();
      for (std::size_t c : newly_satisfied) satisfied_[c] = false;
      for (VertexId w : zeroed) value_[index(w)] = kOpen;
      value_[index(v)] = kOpen;
    }
  }

  const Hypergraph& h_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int8_t> value_;
  std::vector<bool> satisfied_;
  std::vector<TwoValuedState> out_;
};

void require_admissible(const Hypergraph& h, const Coloring& c) {
  const auto report = check_coloring(h, c);
  if (!report.admissible()) {
    throw Error(ErrorCode::NotAdmissible, "coloring is not both exclusive and complete");
  }
}

}  // namespace

std::vector<VertexId> TwoValuedState::support() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (values[v]) out.push_back(vertex_at(v));
  }
  return out;
}

std::vector<TwoValuedState> enumerate_states(const Hypergraph& h, const SearchBudget& budget) {
  uniformity(h);
  return StateSearch(h, budget.max_nodes).run();
}

StateCheck check_state(const Hypergraph& h, std::span<const std::uint8_t> values) {
  if (values.size() != h.vertex_count()) {
    throw Error(ErrorCode::DomainMismatch, "state covers " + std::to_string(values.size()) +
                                               " of " + std::to_string(h.vertex_count()) +
                                               " vertices");
  }
  if (std::any_of(values.begin(), values.end(), [](std::uint8_t x) { return x > 1; })) {
    throw Error(ErrorCode::DomainMismatch, "state values must be 0 or 1");
  }
  StateCheck r;
  for (std::size_t c = 0; c < h.context_count(); ++c) {
    std::size_t ones = 0;
    for (VertexId v : h.context(c).members) ones += values[index(v)];
    r.ones_per_context.push_back(ones);
    if (ones != 1) {
      r.valid = false;
      r.bad_contexts.push_back(c);
    }
  }
  return r;
}

TwoValuedState state_from_support(const Hypergraph& h, std::span<const VertexId> ones) {
  TwoValuedState s;
  s.values.assign(h.vertex_count(), 0);
  for (VertexId v : ones) s.values.at(index(v)) = 1;
  return s;
}

SeparatingReport separating_report(const Hypergraph& h, std::span<const TwoValuedState> states) {
  // Vertices are separated iff their value columns across `states` differ.
  std::vector<std::vector<std::uint8_t>> column(h.vertex_count());
  for (const auto& s : states) {
    for (std::size_t v = 0; v < h.vertex_count(); ++v) column[v].push_back(s.values.at(v));
  }
  SeparatingReport r;
  for (std::size_t u = 0; u < h.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < h.vertex_count(); ++v) {
      if (column[u] == column[v]) r.unseparated_pairs.emplace_back(vertex_at(u), vertex_at(v));
    }
  }
  r.separating = r.unseparated_pairs.empty();
  return r;
}

std::size_t subset_value_profile(std::span<const TwoValuedState> states,
                                 std::span<const VertexId> subset) {
  std::size_t best = 0;
  for (const auto& s : states) {
    std::size_t ones = 0;
    for (VertexId v : subset) ones += s[v];
    best = std::max(best, ones);
  }
  return best;
}

TwoValuedState aggregate(const Hypergraph& h, const Coloring& c, Color color) {
  require_admissible(h, c);
  if (color >= c.k) {
    throw Error(ErrorCode::InvalidArgument, "color " + std::to_string(color) + " out of range");
  }
  TwoValuedState s;
  s.values.reserve(c.colors.size());
  for (Color col : c.colors) s.values.push_back(col == color ? 1 : 0);
  return s;
}

std::vector<AggregabilityEntry> aggregability_report(const Hypergraph& h,
                                                     const SearchBudget& budget) {
  const auto colorings = admissible_colorings(h, budget);
  if (colorings.empty()) {
    throw Error(ErrorCode::NoAdmissibleColoring,
                "chromatic number exceeds the uniformity; nothing to aggregate");
  }
  std::map<TwoValuedState, AggregationWitness> first_witness;
  for (const auto& c : colorings) {
    for (Color col = 0; col < c.k; ++col) {
      first_witness.emplace(aggregate(h, c, col), AggregationWitness{c, col});
    }
  }
  std::vector<AggregabilityEntry> out;
  for (auto& s : enumerate_states(h, budget)) {
    auto it = first_witness.find(s);
    AggregabilityEntry e{std::move(s), std::nullopt};
    if (it != first_witness.end()) e.witness = it->second;
    out.push_back(std::move(e));
  }
  return out;
}

bool is_rational_state(const Hypergraph& h, std::span<const Rational> values) {
  if (values.size() != h.vertex_count()) {
    throw Error(ErrorCode::DomainMismatch, "rational state covers " +
                                               std::to_string(values.size()) + " of " +
                                               std::to_string(h.vertex_count()) + " vertices");
  }
  for (const auto& q : values) {
    if (q < 0 || q > 1) return false;
  }
  for (const auto& ctx : h.contexts()) {
    Rational sum = 0;
    for (VertexId v : ctx.members) sum += values[index(v)];
    if (sum != 1) return false;
  }
  return true;
}

RationalState fractional_state(const Hypergraph& h, const Coloring& c, const ColorValueMap& m) {
  require_admissible(h, c);
  if (m.size() != c.k) {
    throw Error(ErrorCode::ValueMapNotNormalized, "value map has " + std::to_string(m.size()) +
                                                      " entries for " + std::to_string(c.k) +
                                                      " colors");
  }
  Rational total = 0;
  for (const auto& q : m) {
    if (q < 0 || q > 1) {
      throw Error(ErrorCode::ValueMapNotNormalized, "color value " + to_string(q) +
                                                        " outside [0,1]");
    }
    total += q;
  }
  if (total != 1) {
    throw Error(ErrorCode::ValueMapNotNormalized,
                "color values sum to " + to_string(total) + ", not 1");
  }
  RationalState s;
  s.values.reserve(c.colors.size());
  for (Color col : c.colors) s.values.push_back(m[col]);
  return s;
}

std::optional<FractionalWitness> fractional_reachable(const Hypergraph& h,
                                                      const RationalState& target, std::size_t k,
                                                      const SearchBudget& budget) {
  const std::size_t n = uniformity(h);
  if (k != n) {
    throw Error(ErrorCode::InvalidArgument, "fractional reachability requires k = uniformity");
  }
  if (!is_rational_state(h, target.values)) {
    throw Error(ErrorCode::InvalidArgument, "target is not a rational state");
  }

  // The multiset of target values on any context must equal the multiset of
  // the value map, since every color occurs once per context.
  std::vector<Rational> expected(target.values.size() ? n : 0);
  {
    const auto& first = h.context(0).members;
    for (std::size_t i = 0; i < n; ++i) expected[i] = target.values[index(first[i])];
    std::sort(expected.begin(), expected.end());
  }
  for (const auto& ctx : h.contexts()) {
    std::vector<Rational> vals;
    for (VertexId v : ctx.members) vals.push_back(target.values[index(v)]);
    std::sort(vals.begin(), vals.end());
    if (vals != expected) return std::nullopt;
  }

  // Relabeling a coloring only permutes the value map, so orbit
  // representatives suffice. A representative works iff the target is
  // constant on each color class.
  for (const auto& c : admissible_colorings(h, budget)) {
    ColorValueMap m(k);
    std::vector<bool> set(k, false);
    bool consistent = true;
    for (std::size_t v = 0; v < c.colors.size() && consistent; ++v) {
      const Color col = c.colors[v];
      if (!set[col]) {
        m[col] = target.values[v];
        set[col] = true;
      } else if (m[col] != target.values[v]) {
        consistent = false;
      }
    }
    if (consistent) return FractionalWitness{c, std::move(m)};
  }
  return std::nullopt;
}

std::size_t middle_state_index(std::span<const TwoValuedState> states,
                               std::span<const VertexId> cycle) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const bool all_zero =
        std::none_of(cycle.begin(), cycle.end(), [&](VertexId v) { return states[i][v]; });
    if (!all_zero) continue;
    if (found) throw Error(ErrorCode::InvalidArgument, "more than one state vanishes on the cycle");
    found = i;
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "no state vanishes on the cycle");
  return *found;
}

}  // namespace ctxlab
