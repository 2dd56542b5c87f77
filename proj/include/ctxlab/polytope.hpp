#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctxlab/hypergraph.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/states.hpp"

namespace ctxlab {

/// How two-valued states are mapped to points of a correlation polytope.
///
/// probability:  one coordinate s(v) per listed vertex.
/// pair_product: one coordinate A(u)A(v) per listed pair, where A = 1 - 2s
///               maps the 0/1 value to +1/-1.
struct CoordinateSpec {
  enum class Kind { probability, pair_product };

  Kind kind = Kind::probability;
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> pairs;

  static CoordinateSpec probabilities(std::vector<VertexId> vertices);
  static CoordinateSpec pair_products(std::vector<std::pair<VertexId, VertexId>> pairs);
  std::size_t arity() const noexcept {
    return kind == Kind::probability ? vertices.size() : pairs.size();
  }
};

/// Entries are expected in canonical form, which GMP arithmetic and
/// parse_rational always produce. facet_enumeration and affine_hull
/// canonicalize their input.
using RationalPoint = std::vector<Rational>;

struct PointSet {
  std::vector<RationalPoint> points;          // deduplicated, first-seen order
  std::vector<std::vector<std::size_t>> sources;  // state indices mapped to each point
};

/// Throws UnknownVertex for vertices outside `h`, InvalidArgument for
/// repeated coordinates.
PointSet evaluate_coordinates(const Hypergraph& h, std::span<const TwoValuedState> states,
                              const CoordinateSpec& spec);

/// normal . x >= bound (ge) or normal . x == bound (eq), integer data with
/// gcd(normal, bound) = 1.
struct LinearInequality {
  enum class Sense { ge, eq };

  std::vector<Integer> normal;
  Integer bound;
  Sense sense = Sense::ge;

  Rational lhs(const RationalPoint& x) const;
  bool satisfied_by(const RationalPoint& x) const;
  bool tight_at(const RationalPoint& x) const { return lhs(x) == bound; }
  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
  friend std::weak_ordering operator<=>(const LinearInequality& a, const LinearInequality& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    if (a.bound < b.bound) return std::weak_ordering::less;
    if (b.bound < a.bound) return std::weak_ordering::greater;
    return a.sense <=> b.sense;
  }
};

std::string to_string(const LinearInequality& ineq);

struct AffineHull {
  std::size_t dimension = 0;
  /// Independent equalities, first nonzero normal entry positive; count is
  /// ambient dimension minus `dimension`.
  std::vector<LinearInequality> equalities;
};

/// Requires at least one point, all of equal length.
AffineHull affine_hull(std::span<const RationalPoint> points);

/// H-representation of a polytope.
///
/// Facet normals lie in the direction space of the affine hull (orthogonal to
/// every equality normal), which makes each facet's representation unique.
struct PolytopeHRep {
  std::size_t ambient_dimension = 0;
  std::size_t dimension = 0;
  std::vector<LinearInequality> equalities;
  std::vector<LinearInequality> facets;  // sorted
  friend bool operator==(const PolytopeHRep&, const PolytopeHRep&) = default;
};

enum class FacetMethod { double_description, brute_force };

struct FacetOptions {
  FacetMethod method = FacetMethod::double_description;
  std::size_t max_dimension = 12;
  std::size_t max_points = 64;
  /// Brute force: maximum candidate subsets. Double description: maximum
  /// intermediate rays.
  std::uint64_t max_work = 20'000'000;
};

/// Exact convex hull facets. Throws ScaleBudgetExceeded beyond `options`.
PolytopeHRep facet_enumeration(std::span<const RationalPoint> points,
                               const FacetOptions& options = {});

struct HRepCheck {
  bool sound = true;
  std::vector<std::size_t> tightness;  // per facet: number of tight points
  /// Per facet: whether the tight points span a (dimension-1)-flat.
  std::vector<bool> facet_defining;
};

HRepCheck verify_hrep(std::span<const RationalPoint> points, const PolytopeHRep& hrep);

/// Vertices of a bounded H-representation, by solving every system of
/// `dimension` facets together with the equalities. Sorted lexicographically.
/// Throws ScaleBudgetExceeded when more than `max_work` subsets are needed.
std::vector<RationalPoint> vertex_enumeration(const PolytopeHRep& hrep,
                                              std::uint64_t max_work = 20'000'000);

}  // namespace ctxlab
