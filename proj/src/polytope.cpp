#include "ctxlab/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <set>

#include "ctxlab/error.hpp"
#include "linalg.hpp"

namespace ctxlab {

namespace {

using linalg::Matrix;
using linalg::Vector;

// Affine frame of a point set: base point, RREF basis of the direction space
// and its pivot columns. Projection onto the pivot columns is injective on
// the affine hull.
struct Frame {
  RationalPoint origin;
  Matrix basis;
  std::vector<std::size_t> pivots;
  std::vector<LinearInequality> equalities;
};

Frame make_frame(std::span<const RationalPoint> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "affine hull of no points");
  const std::size_t d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorCode::InvalidArgument, "points differ in length");
  }
  Frame f;
  f.origin = points.front();
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = points[i][j] - f.origin[j];
    f.basis.push_back(std::move(diff));
  }
  f.pivots = linalg::rref(f.basis, d);

  Matrix directions = f.basis;
  for (auto& normal : linalg::null_space(std::move(directions), d)) {
    const auto lead = std::find_if(normal.begin(), normal.end(),
                                   [](const Rational& q) { return q != 0; });
    if (*lead < 0) {
      for (auto& q : normal) q = -q;
    }
    normal.push_back(linalg::dot(normal, f.origin));
    const auto ints = linalg::primitive_integers(normal);
    LinearInequality eq;
    eq.normal.assign(ints.begin(), ints.end() - 1);
    eq.bound = ints.back();
    eq.sense = LinearInequality::Sense::eq;
    f.equalities.push_back(std::move(eq));
  }
  return f;
}

std::vector<RationalPoint> deduplicate(std::span<const RationalPoint> points) {
  std::set<RationalPoint> seen;
  std::vector<RationalPoint> out;
  for (RationalPoint p : points) {
    for (auto& x : p) x.canonicalize();
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  if (r > Integer(std::to_string(cap))) return cap + 1;
  return r.get_ui();
}

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// A facet candidate in projected coordinates: alpha . y >= beta, stored as the
// integer vector (beta, alpha...).
using Homogeneous = std::vector<Integer>;

Integer evaluate(const Homogeneous& h, const std::vector<Integer>& row) {
  Integer s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) s += h[i] * row[i];
  return s;
}

Homogeneous primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

// Constraint rows (-L, L*y) of the homogenized polar cone, with L clearing the
// denominators of y. A vector (beta, alpha) satisfies row . h >= 0 iff
// alpha . y >= beta.
std::vector<std::vector<Integer>> polar_rows(const std::vector<Vector>& projected) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& y : projected) {
    Vector lifted;
    lifted.push_back(-1);
    lifted.insert(lifted.end(), y.begin(), y.end());
    rows.push_back(linalg::primitive_integers(lifted));
  }
  return rows;
}

struct ConeRay {
  Homogeneous h;
  boost::dynamic_bitset<> zeros;
};

std::vector<Homogeneous> double_description(const std::vector<Vector>& projected,
                                            std::uint64_t max_rays) {
  const auto rows = polar_rows(projected);
  const std::size_t dim = rows.front().size();
  const std::size_t m = rows.size();

  // Initial simplicial cone from the first linearly independent rows.
  std::vector<std::size_t> chosen;
  Matrix echelon;
  for (std::size_t i = 0; i < m && chosen.size() < dim; ++i) {
    Matrix trial = echelon;
    trial.emplace_back(rows[i].begin(), rows[i].end());
    if (linalg::rref(trial, dim).size() > echelon.size()) {
      echelon = std::move(trial);
      chosen.push_back(i);
    }
  }
  Matrix basis_rows;
  for (auto i : chosen) basis_rows.emplace_back(rows[i].begin(), rows[i].end());

  std::vector<ConeRay> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Vector unit(dim, 0);
    unit[j] = 1;
    auto col = linalg::solve_unique(basis_rows, unit);
    ConeRay r{linalg::primitive_integers(*col), boost::dynamic_bitset<>(m)};
    for (std::size_t t = 0; t < dim; ++t) {
      if (t != j) r.zeros.set(chosen[t]);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  for (auto i : chosen) processed[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<std::size_t> pos, neg;
    std::vector<Integer> value(rays.size());
    std::vector<ConeRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = evaluate(rays[r].h, rows[i]);
      if (value[r] > 0) {
        pos.push_back(r);
      } else if (value[r] < 0) {
        neg.push_back(r);
      } else {
        rays[r].zeros.set(i);
      }
    }
    if (neg.empty()) continue;

    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] >= 0) next.push_back(rays[r]);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        auto common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Homogeneous h(dim);
        for (std::size_t t = 0; t < dim; ++t) {
          h[t] = value[p] * rays[n].h[t] - value[n] * rays[p].h[t];
        }
        common.set(i);
        next.push_back({primitive(std::move(h)), std::move(common)});
        if (next.size() > max_rays) {
          throw Error(ErrorCode::ScaleBudgetExceeded,
                      "double description exceeded " + std::to_string(max_rays) + " rays");
        }
      }
    }
    rays = std::move(next);
  }

  std::vector<Homogeneous> out;
  for (auto& r : rays) {
    const bool trivial = std::all_of(r.h.begin() + 1, r.h.end(), [](const Integer& z) { return z == 0; });
    if (!trivial) out.push_back(std::move(r.h));
  }
  return out;
}

std::vector<Homogeneous> brute_force(const std::vector<Vector>& projected, std::size_t dprime,
                                     std::uint64_t max_subsets) {
  const std::size_t m = projected.size();
  if (binomial_capped(m, dprime, max_subsets) > max_subsets) {
    throw Error(ErrorCode::ScaleBudgetExceeded,
                "brute-force facet search needs more than " + std::to_string(max_subsets) +
                    " candidate subsets");
  }
  const auto rows = polar_rows(projected);
  std::set<Homogeneous> found;
  for_each_combination(m, dprime, [&](const std::vector<std::size_t>& subset) {
    Matrix system;
    for (auto i : subset) system.emplace_back(rows[i].begin(), rows[i].end());
    auto kernel = linalg::null_space(std::move(system), dprime + 1);
    if (kernel.size() != 1) return;  // subset not affinely independent
    Homogeneous h = linalg::primitive_integers(kernel.front());
    bool any_pos = false, any_neg = false;
    for (const auto& row : rows) {
      const Integer s = evaluate(h, row);
      any_pos = any_pos || s > 0;
      any_neg = any_neg || s < 0;
    }
    if (any_pos && any_neg) return;
    if (any_neg) {
      for (auto& z : h) z = -z;
    }
    found.insert(std::move(h));
  });
  return {found.begin(), found.end()};
}

// Lifts alpha . y >= beta from projected coordinates to a canonical inequality
// in the ambient space with normal inside the direction space.
LinearInequality lift(const Homogeneous& h, const Frame& f, std::size_t d) {
  Vector full(d, 0);
  for (std::size_t t = 0; t < f.pivots.size(); ++t) full[f.pivots[t]] = Rational(h[t + 1]);

  Vector normal = full;
  if (f.pivots.size() < d) {
    const std::size_t k = f.basis.size();
    Matrix gram(k, Vector(k));
    Vector rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) gram[i][j] = linalg::dot(f.basis[i], f.basis[j]);
      rhs[i] = linalg::dot(f.basis[i], full);
    }
    const auto lambda = linalg::solve_unique(gram, rhs);
    for (std::size_t j = 0; j < d; ++j) {
      normal[j] = 0;
      for (std::size_t i = 0; i < k; ++i) normal[j] += (*lambda)[i] * f.basis[i][j];
    }
  }
  Vector shift(d);
  for (std::size_t j = 0; j < d; ++j) shift[j] = normal[j] - full[j];
  Vector combined = normal;
  combined.push_back(Rational(h[0]) + linalg::dot(shift, f.origin));
  const auto ints = linalg::primitive_integers(combined);

  LinearInequality ineq;
  ineq.normal.assign(ints.begin(), ints.end() - 1);
  ineq.bound = ints.back();
  ineq.sense = LinearInequality::Sense::ge;
  return ineq;
}

}  // namespace

CoordinateSpec CoordinateSpec::probabilities(std::vector<VertexId> vertices) {
  CoordinateSpec s;
  s.kind = Kind::probability;
  s.vertices = std::move(vertices);
  return s;
}

CoordinateSpec CoordinateSpec::pair_products(std::vector<std::pair<VertexId, VertexId>> pairs) {
  CoordinateSpec s;
  s.kind = Kind::pair_product;
  s.pairs = std::move(pairs);
  return s;
}

PointSet evaluate_coordinates(const Hypergraph& h, std::span<const TwoValuedState> states,
                              const CoordinateSpec& spec) {
  auto check = [&](VertexId v) {
    if (index(v) >= h.vertex_count()) {
      throw Error(ErrorCode::UnknownVertex, "coordinate references vertex index " +
                                                std::to_string(index(v)));
    }
  };
  if (spec.kind == CoordinateSpec::Kind::probability) {
    for (VertexId v : spec.vertices) check(v);
    std::set<VertexId> distinct(spec.vertices.begin(), spec.vertices.end());
    if (distinct.size() != spec.vertices.size()) {
      throw Error(ErrorCode::InvalidArgument, "probability coordinates repeat a vertex");
    }
  } else {
    std::set<std::pair<VertexId, VertexId>> distinct;
    for (auto [u, v] : spec.pairs) {
      check(u);
      check(v);
      if (u == v) throw Error(ErrorCode::InvalidArgument, "pair of a vertex with itself");
      if (!distinct.insert(std::minmax(u, v)).second) {
        throw Error(ErrorCode::InvalidArgument, "pair coordinates repeat a pair");
      }
    }
  }

  PointSet out;
  std::map<RationalPoint, std::size_t> slot;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto& st = states[s];
    if (st.values.size() != h.vertex_count()) {
      throw Error(ErrorCode::DomainMismatch, "state does not match the hypergraph");
    }
    RationalPoint p;
    if (spec.kind == CoordinateSpec::Kind::probability) {
      for (VertexId v : spec.vertices) p.emplace_back(st[v] ? 1 : 0);
    } else {
      for (auto [u, v] : spec.pairs) {
        const int a = st[u] ? -1 : 1;
        const int b = st[v] ? -1 : 1;
        p.emplace_back(a * b);
      }
    }
    auto [it, inserted] = slot.emplace(p, out.points.size());
    if (inserted) {
      out.points.push_back(std::move(p));
      out.sources.emplace_back();
    }
    out.sources[it->second].push_back(s);
  }
  return out;
}

Rational LinearInequality::lhs(const RationalPoint& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * x.at(i);
  return s;
}

bool LinearInequality::satisfied_by(const RationalPoint& x) const {
  const Rational v = lhs(x);
  return sense == Sense::eq ? v == bound : v >= bound;
}

std::string to_string(const LinearInequality& ineq) {
  std::string s;
  for (std::size_t i = 0; i < ineq.normal.size(); ++i) {
    const Integer& a = ineq.normal[i];
    if (a == 0) continue;
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    const Integer mag = abs(a);
    if (mag != 1) s += mag.get_str() + "*";
    s += "x" + std::to_string(i + 1);
  }
  if (s.empty()) s = "0";
  s += ineq.sense == LinearInequality::Sense::eq ? " = " : " >= ";
  return s + ineq.bound.get_str();
}

AffineHull affine_hull(std::span<const RationalPoint> points) {
  Frame f = make_frame(deduplicate(points));
  return AffineHull{f.pivots.size(), std::move(f.equalities)};
}

PolytopeHRep facet_enumeration(std::span<const RationalPoint> points, const FacetOptions& options) {
  const auto distinct = deduplicate(points);
  Frame frame = make_frame(distinct);
  const std::size_t d = distinct.front().size();
  if (d > options.max_dimension || distinct.size() > options.max_points) {
    throw Error(ErrorCode::ScaleBudgetExceeded,
                std::to_string(distinct.size()) + " points in dimension " + std::to_string(d) +
                    " exceed the limits (" + std::to_string(options.max_points) + " points, " +
                    "dimension " + std::to_string(options.max_dimension) + ")");
  }

  PolytopeHRep hrep;
  hrep.ambient_dimension = d;
  hrep.dimension = frame.pivots.size();
  hrep.equalities = frame.equalities;
  if (hrep.dimension == 0) return hrep;

  std::vector<Vector> projected;
  for (const auto& p : distinct) {
    Vector y;
    for (auto c : frame.pivots) y.push_back(p[c]);
    projected.push_back(std::move(y));
  }

  const auto candidates = options.method == FacetMethod::double_description
                              ? double_description(projected, options.max_work)
                              : brute_force(projected, hrep.dimension, options.max_work);
  std::set<LinearInequality> facets;
  for (const auto& h : candidates) facets.insert(lift(h, frame, d));
  hrep.facets.assign(facets.begin(), facets.end());
  return hrep;
}

HRepCheck verify_hrep(std::span<const RationalPoint> points, const PolytopeHRep& hrep) {
  HRepCheck check;
  for (const auto& eq : hrep.equalities) {
    for (const auto& p : points) {
      if (p.size() != eq.normal.size() || !eq.tight_at(p)) check.sound = false;
    }
  }
  for (const auto& f : hrep.facets) {
    std::vector<RationalPoint> tight;
    for (const auto& p : points) {
      if (p.size() != f.normal.size()) {
        check.sound = false;
        continue;
      }
      const Rational v = f.lhs(p);
      if (v < f.bound) check.sound = false;
      if (v == f.bound) tight.push_back(p);
    }
    check.tightness.push_back(tight.size());
    const bool defining =
        !tight.empty() && hrep.dimension >= 1 &&
        affine_hull(deduplicate(tight)).dimension + 1 == hrep.dimension;
    check.facet_defining.push_back(defining);
  }
  return check;
}

std::vector<RationalPoint> vertex_enumeration(const PolytopeHRep& hrep, std::uint64_t max_work) {
  const std::size_t d = hrep.ambient_dimension;
  const std::size_t k = hrep.dimension;
  if (binomial_capped(hrep.facets.size(), k, max_work) > max_work) {
    throw Error(ErrorCode::ScaleBudgetExceeded, "vertex enumeration needs too many facet subsets");
  }
  Matrix base;
  Vector base_rhs;
  for (const auto& eq : hrep.equalities) {
    base.emplace_back(eq.normal.begin(), eq.normal.end());
    base_rhs.emplace_back(eq.bound);
  }
  std::set<RationalPoint> vertices;
  for_each_combination(hrep.facets.size(), k, [&](const std::vector<std::size_t>& subset) {
    Matrix a = base;
    Vector b = base_rhs;
    for (auto i : subset) {
      a.emplace_back(hrep.facets[i].normal.begin(), hrep.facets[i].normal.end());
      b.emplace_back(hrep.facets[i].bound);
    }
    if (a.empty()) return;
    for (auto& row : a) row.resize(d);
    auto x = linalg::solve_unique(a, b);
    if (!x) return;
    for (const auto& f : hrep.facets) {
      if (!f.satisfied_by(*x)) return;
    }
    vertices.insert(std::move(*x));
  });
  return {vertices.begin(), vertices.end()};
}

}  // namespace ctxlab
