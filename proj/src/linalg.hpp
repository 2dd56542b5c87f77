#pragma once

// Exact dense linear algebra over Q for the polytope code. Internal header.

#include <cstddef>
#include <optional>
#include <vector>

#include "ctxlab/rational.hpp"

namespace ctxlab::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form in place; returns pivot columns. Zero rows are
/// dropped, so afterwards m.size() equals the rank.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column of the RREF, with a 1 in
/// that free column.
std::vector<Vector> null_space(Matrix m, std::size_t cols);

/// Unique solution of the square or overdetermined system a x = b, or nullopt
/// when it is inconsistent or underdetermined.
std::optional<Vector> solve_unique(const Matrix& a, const Vector& b);

Rational dot(const Vector& a, const Vector& b);

/// Scales a rational vector by a positive factor to coprime integers.
std::vector<Integer> primitive_integers(const Vector& v);

}  // namespace ctxlab::linalg
