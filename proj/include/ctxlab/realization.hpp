#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctxlab/hypergraph.hpp"
#include "ctxlab/rational.hpp"

namespace ctxlab {

/// A one-dimensional subspace, stored as its primitive integer generator:
/// coprime entries, first nonzero entry positive.
class Ray {
 public:
  /// Canonicalizes `coords`; throws ZeroVector if all entries vanish.
  explicit Ray(std::span<const Rational> coords);
  explicit Ray(std::span<const Integer> coords);
  Ray(std::initializer_list<long> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  friend bool operator==(const Ray&, const Ray&) = default;
  friend bool operator<(const Ray& a, const Ray& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Integer> coords_;
};

Ray canonical_ray(std::span<const Rational> coords);
Integer dot(const Ray& a, const Ray& b);
/// Cross product of two rays in dimension 3, canonicalized.
/// Throws WrongDimension or CollinearInput.
Ray cross_complete(const Ray& a, const Ray& b);

std::string to_string(const Ray& r);

/// Vertex-to-ray labelling. Rays may be missing for some vertices while a
/// document is being assembled; verification requires every vertex covered.
struct Realization {
  std::size_t dimension = 0;
  std::vector<std::optional<Ray>> rays;  // indexed by vertex

  std::size_t covered() const;
  bool complete() const { return covered() == rays.size(); }
  friend bool operator==(const Realization&, const Realization&) = default;
};

struct ContextViolation {
  std::size_t context;
  std::optional<std::pair<VertexId, VertexId>> pair;  // nonorthogonal pair, if any
  std::string reason;
};

struct RealizationReport {
  bool contexts_ok = true;
  std::vector<ContextViolation> context_violations;
  std::vector<std::pair<VertexId, VertexId>> duplicate_rays;
  bool faithful_checked = false;
  /// Pairs that share no context yet are orthogonal.
  std::vector<std::pair<VertexId, VertexId>> unexpected_orthogonal;
  bool faithful() const { return faithful_checked && unexpected_orthogonal.empty(); }
  bool ok() const { return contexts_ok && duplicate_rays.empty(); }
};

/// Exact check that every context is an orthogonal basis (pairwise zero inner
/// products and full rank). With `faithful`, additionally scans all pairs not
/// sharing a context for accidental orthogonality. Throws DomainMismatch if a
/// vertex lacks a ray or dimension differs from the uniformity.
RealizationReport verify_realization(const Hypergraph& h, const Realization& r, bool faithful);

/// Exact rank of the given integer row vectors.
std::size_t rank(std::span<const std::vector<Integer>> rows);

}  // namespace ctxlab
