#include "ctxlab/realization.hpp"

#include <algorithm>
#include <map>

#include "ctxlab/error.hpp"

namespace ctxlab {

namespace {

std::vector<Integer> primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw Error(ErrorCode::ZeroVector, "zero vector does not span a ray");
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

}  // namespace

Ray::Ray(std::span<const Rational> coords) {
  Integer lcm = 1;
  for (const auto& q : coords) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> scaled;
  scaled.reserve(coords.size());
  for (const auto& q : coords) scaled.push_back(q.get_num() * (lcm / q.get_den()));
  coords_ = primitive(std::move(scaled));
}

Ray::Ray(std::span<const Integer> coords)
    : coords_(primitive(std::vector<Integer>(coords.begin(), coords.end()))) {}

Ray::Ray(std::initializer_list<long> coords) {
  std::vector<Integer> v;
  for (long x : coords) v.emplace_back(x);
  coords_ = primitive(std::move(v));
}

Ray canonical_ray(std::span<const Rational> coords) { return Ray(coords); }

Integer dot(const Ray& a, const Ray& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::WrongDimension, "inner product of rays of different dimension");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += a.coords()[i] * b.coords()[i];
  return s;
}

Ray cross_complete(const Ray& a, const Ray& b) {
  if (a.dimension() != 3 || b.dimension() != 3) {
    throw Error(ErrorCode::WrongDimension, "cross completion requires dimension 3");
  }
  const auto& x = a.coords();
  const auto& y = b.coords();
  std::vector<Integer> c = {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
                            x[0] * y[1] - x[1] * y[0]};
  if (std::all_of(c.begin(), c.end(), [](const Integer& z) { return z == 0; })) {
    throw Error(ErrorCode::CollinearInput, to_string(a) + " and " + to_string(b) + " are collinear");
  }
  return Ray(std::span<const Integer>(c));
}

std::string to_string(const Ray& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    if (i) s += ",";
    s += r.coords()[i].get_str();
  }
  return s + ")";
}

std::size_t Realization::covered() const {
  return static_cast<std::size_t>(
      std::count_if(rays.begin(), rays.end(), [](const auto& r) { return r.has_value(); }));
}

std::size_t rank(std::span<const std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

RealizationReport verify_realization(const Hypergraph& h, const Realization& r, bool faithful) {
  if (r.rays.size() != h.vertex_count()) {
    throw Error(ErrorCode::DomainMismatch, "realization has " + std::to_string(r.rays.size()) +
                                               " entries for " +
                                               std::to_string(h.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < r.rays.size(); ++v) {
    if (!r.rays[v]) {
      throw Error(ErrorCode::DomainMismatch, "vertex '" + h.name(vertex_at(v)) + "' has no ray");
    }
    if (r.rays[v]->dimension() != r.dimension) {
      throw Error(ErrorCode::DomainMismatch,
                  "ray of '" + h.name(vertex_at(v)) + "' has wrong dimension");
    }
  }
  if (uniformity(h) != r.dimension) {
    throw Error(ErrorCode::DomainMismatch, "realization dimension " + std::to_string(r.dimension) +
                                               " differs from uniformity");
  }

  RealizationReport report;
  for (std::size_t c = 0; c < h.context_count(); ++c) {
    const auto& members = h.context(c).members;
    std::vector<std::vector<Integer>> gram_rows;
    bool orthogonal = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Ray& a = *r.rays[index(members[i])];
      gram_rows.push_back(a.coords());
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (dot(a, *r.rays[index(members[j])]) != 0) {
          orthogonal = false;
          report.context_violations.push_back(
              {c, std::pair{members[i], members[j]}, "nonzero inner product"});
        }
      }
    }
    if (orthogonal && rank(gram_rows) != r.dimension) {
      report.context_violations.push_back({c, std::nullopt, "rays do not span the space"});
    }
  }
  report.contexts_ok = report.context_violations.empty();

  std::map<Ray, VertexId> first_use;
  for (std::size_t v = 0; v < r.rays.size(); ++v) {
    auto [it, inserted] = first_use.emplace(*r.rays[v], vertex_at(v));
    if (!inserted) report.duplicate_rays.emplace_back(it->second, vertex_at(v));
  }

  if (faithful) {
    report.faithful_checked = true;
    for (std::size_t u = 0; u < r.rays.size(); ++u) {
      for (std::size_t v = u + 1; v < r.rays.size(); ++v) {
        if (h.share_context(vertex_at(u), vertex_at(v))) continue;
        if (dot(*r.rays[u], *r.rays[v]) == 0) {
          report.unexpected_orthogonal.emplace_back(vertex_at(u), vertex_at(v));
        }
      }
    }
  }
  return report;
}

}  // namespace ctxlab
