#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ctxlab {

/// Exact rational; always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0). Returns nullopt on malformed input or a
/// zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// "p" for integers, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace ctxlab
