#include "ctxlab/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "ctxlab/error.hpp"

namespace ctxlab {

namespace {

constexpr Color kUncolored = static_cast<Color>(-1);

// Backtracking search over exclusive colorings with color-orbit symmetry
// breaking: the first context is fixed to 0..n-1 and a branch may open at most
// the next unused color. Vertices are picked most-constrained-first (fewest
// admissible colors, i.e. highest saturation), ties by lowest index.
class ColoringSearch {
 public:
  ColoringSearch(const Hypergraph& h, std::size_t k, std::uint64_t max_nodes)
      : h_(h), k_(k), max_nodes_(max_nodes), colors_(h.vertex_count(), kUncolored),
        blocked_(h.vertex_count(), std::vector<std::uint32_t>(k, 0)),
        saturation_(h.vertex_count(), 0) {}

  // Visits every orbit representative; `leaf` returns false to stop.
  // Returns false if stopped early.
  bool run(const std::function<bool(const std::vector<Color>&)>& leaf) {
    leaf_ = &leaf;
    const auto& first = h_.context(0).members;
    if (first.size() > k_) return true;
    for (std::size_t i = 0; i < first.size(); ++i) assign(first[i], static_cast<Color>(i));
    used_ = first.size();
    remaining_ = h_.vertex_count() - first.size();
    return descend();
  }

 private:
  void assign(VertexId v, Color c) {
    colors_[index(v)] = c;
    for (VertexId w : h_.neighbors(v)) {
      if (blocked_[index(w)][c]++ == 0) ++saturation_[index(w)];
    }
  }

  void unassign(VertexId v) {
    const Color c = colors_[index(v)];
    colors_[index(v)] = kUncolored;
    for (VertexId w : h_.neighbors(v)) {
      if (--blocked_[index(w)][c] == 0) --saturation_[index(w)];
    }
  }

  bool descend() {
    if (++nodes_ > max_nodes_) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "coloring search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    if (remaining_ == 0) return (*leaf_)(colors_);

    const bool may_open = used_ < k_;
    std::size_t best = h_.vertex_count();
    std::size_t best_options = k_ + 1;
    for (std::size_t v = 0; v < h_.vertex_count(); ++v) {
      if (colors_[v] != kUncolored) continue;
      const std::size_t options = (used_ - saturation_[v]) + (may_open ? 1 : 0);
      if (options < best_options) {
        best_options = options;
        best = v;
        if (options == 0) return true;  // dead end
      }
    }

    const VertexId v = vertex_at(best);
    --remaining_;
    const std::size_t limit = may_open ? used_ + 1 : used_;
    for (Color c = 0; c < limit; ++c) {
      if (blocked_[best][c] != 0) continue;
      const bool opened = c == used_;
      if (opened) ++used_;
      assign(v, c);
      const bool keep_going = descend();
      unassign(v);
      if (opened) --used_;
      if (!keep_going) {
        ++remaining_;
        return false;
      }
    }
    ++remaining_;
    return true;
  }

  const Hypergraph& h_;
  std::size_t k_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<Color> colors_;
  std::vector<std::vector<std::uint32_t>> blocked_;  // [vertex][color] neighbor count
  std::vector<std::size_t> saturation_;
  std::size_t used_ = 0;
  std::size_t remaining_ = 0;
  const std::function<bool(const std::vector<Color>&)>* leaf_ = nullptr;
};

}  // namespace

ColoringReport check_coloring(const Hypergraph& h, const Coloring& c) {
  if (c.colors.size() != h.vertex_count()) {
    throw Error(ErrorCode::DomainMismatch, "coloring covers " + std::to_string(c.colors.size()) +
                                               " of " + std::to_string(h.vertex_count()) +
                                               " vertices");
  }
  for (Color col : c.colors) {
    if (col >= c.k) {
      throw Error(ErrorCode::DomainMismatch,
                  "color " + std::to_string(col) + " out of range for k=" + std::to_string(c.k));
    }
  }

  ColoringReport r;
  r.class_sizes.assign(c.k, 0);
  for (Color col : c.colors) ++r.class_sizes[col];

  std::vector<std::size_t> seen(c.k);
  for (std::size_t ci = 0; ci < h.context_count(); ++ci) {
    std::fill(seen.begin(), seen.end(), 0);
    for (VertexId v : h.context(ci).members) ++seen[c[v]];
    for (Color col = 0; col < c.k; ++col) {
      if (seen[col] > 1) {
        r.exclusive = false;
        r.violations.push_back({ColoringViolation::Kind::Repeated, ci, col, seen[col]});
      } else if (seen[col] == 0) {
        r.complete = false;
        r.violations.push_back({ColoringViolation::Kind::Missing, ci, col, 0});
      }
    }
  }

  if (c.k > 0 &&
      std::adjacent_find(r.class_sizes.begin(), r.class_sizes.end(), std::not_equal_to<>()) !=
          r.class_sizes.end()) {
    r.equitable = false;
    for (Color col = 0; col < c.k; ++col) {
      r.violations.push_back({ColoringViolation::Kind::Unbalanced, 0, col, r.class_sizes[col]});
    }
  }
  return r;
}

Coloring canonicalize(const Hypergraph& h, const Coloring& c) {
  std::vector<Color> relabel(c.k, kUncolored);
  Color next = 0;
  auto take = [&](Color old) {
    if (relabel[old] == kUncolored) relabel[old] = next++;
  };
  if (h.context_count() > 0) {
    for (VertexId v : h.context(0).members) take(c[v]);
  }
  for (Color col : c.colors) take(col);
  Coloring out{c.colors, c.k};
  for (auto& col : out.colors) col = relabel[col];
  return out;
}

std::optional<Coloring> find_coloring(const Hypergraph& h, std::size_t k, bool require_complete,
                                      const SearchBudget& budget) {
  const std::size_t n = uniformity(h);
  if (k < n) {
    throw Error(ErrorCode::InvalidArgument,
                "k=" + std::to_string(k) + " is below the uniformity " + std::to_string(n));
  }
  // With k > n no context can hold all k colors.
  if (require_complete && k > n) return std::nullopt;

  std::optional<Coloring> found;
  ColoringSearch search(h, k, budget.max_nodes);
  search.run([&](const std::vector<Color>& colors) {
    found = canonicalize(h, Coloring{colors, k});
    return false;
  });
  return found;
}

std::optional<Coloring> find_coloring(const Hypergraph& h, std::size_t k) {
  return find_coloring(h, k, k == uniformity(h));
}

ChromaticResult chromatic_number(const Hypergraph& h, std::optional<std::size_t> k_max,
                                 const SearchBudget& budget) {
  ChromaticResult result;
  if (h.context_count() == 0) return result;
  const std::size_t n = uniformity(h);
  result.uniformity = n;
  const std::size_t top = k_max.value_or(n + 3);
  if (top < n) {
    throw Error(ErrorCode::InvalidArgument, "k_max is below the uniformity");
  }
  for (std::size_t k = n; k <= top; ++k) {
    if (auto c = find_coloring(h, k, false, budget)) {
      result.chromatic_number = k;
      result.witness = std::move(c);
      return result;
    }
    result.exhausted.push_back(k);
  }
  throw Error(ErrorCode::ExceedsKMax, "no exclusive coloring with at most " + std::to_string(top) +
                                          " colors");
}

std::vector<Coloring> relabelings(const Coloring& c) {
  std::vector<Color> used(c.colors.begin(), c.colors.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  std::vector<Coloring> out;
  std::vector<Color> image(used.size());
  std::vector<bool> taken(c.k, false);
  std::vector<Color> lookup(c.k, 0);
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == used.size()) {
      for (std::size_t j = 0; j < used.size(); ++j) lookup[used[j]] = image[j];
      Coloring r{c.colors, c.k};
      for (auto& col : r.colors) col = lookup[col];
      out.push_back(std::move(r));
      return;
    }
    for (Color t = 0; t < c.k; ++t) {
      if (taken[t]) continue;
      taken[t] = true;
      image[i] = t;
      place(i + 1);
      taken[t] = false;
    }
  };
  place(0);
  return out;
}

void enumerate_colorings(const Hypergraph& h, std::size_t k, bool up_to_relabeling,
                         const std::function<bool(const Coloring&)>& sink,
                         const EnumerationLimits& limits) {
  const std::size_t n = uniformity(h);
  if (h.vertex_count() > limits.max_vertices || k > limits.max_colors) {
    throw Error(ErrorCode::SearchBudgetExceeded,
                "enumeration limited to " + std::to_string(limits.max_vertices) +
                    " vertices and " + std::to_string(limits.max_colors) + " colors");
  }
  if (k < n) return;
  ColoringSearch search(h, k, limits.budget.max_nodes);
  search.run([&](const std::vector<Color>& colors) {
    Coloring rep = canonicalize(h, Coloring{colors, k});
    if (up_to_relabeling) return sink(rep);
    for (const auto& c : relabelings(rep)) {
      if (!sink(c)) return false;
    }
    return true;
  });
}

std::vector<Coloring> enumerate_colorings(const Hypergraph& h, std::size_t k,
                                          bool up_to_relabeling, const EnumerationLimits& limits) {
  std::vector<Coloring> out;
  enumerate_colorings(
      h, k, up_to_relabeling,
      [&](const Coloring& c) {
        out.push_back(c);
        return true;
      },
      limits);
  return out;
}

std::vector<Coloring> admissible_colorings(const Hypergraph& h, const SearchBudget& budget) {
  const std::size_t n = uniformity(h);
  EnumerationLimits limits;
  limits.max_vertices = std::max<std::size_t>(limits.max_vertices, h.vertex_count());
  limits.max_colors = std::max(limits.max_colors, n);
  limits.budget = budget;
  // With k = n every exclusive coloring is complete.
  return enumerate_colorings(h, n, true, limits);
}

bool SeparationTable::is_separated(VertexId u, VertexId v) const {
  if (u == v) throw Error(ErrorCode::InvalidArgument, "separation of a vertex from itself");
  return separated.at(index(u)).at(index(v));
}

std::vector<std::pair<VertexId, VertexId>> SeparationTable::unseparated_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t u = 0; u < separated.size(); ++u) {
    for (std::size_t v = u + 1; v < separated.size(); ++v) {
      if (!separated[u][v]) out.emplace_back(vertex_at(u), vertex_at(v));
    }
  }
  return out;
}

SeparationTable chromatic_separation(const Hypergraph& h, const SearchBudget& budget) {
  const auto colorings = admissible_colorings(h, budget);
  if (colorings.empty()) {
    throw Error(ErrorCode::NoAdmissibleColoring,
                "chromatic number exceeds the uniformity; no admissible coloring");
  }
  const std::size_t nv = h.vertex_count();
  SeparationTable t;
  t.separated.assign(nv, std::vector<bool>(nv, false));
  for (const auto& c : colorings) {
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) {
        if (c.colors[u] != c.colors[v]) t.separated[u][v] = t.separated[v][u] = true;
      }
    }
  }
  return t;
}

}  // namespace ctxlab
