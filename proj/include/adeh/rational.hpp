#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adeh {

/// Arbitrary precision rational, always in canonical form (positive denominator,
/// coprime parts). GMP keeps results of arithmetic canonical; values built from
/// raw numerator/denominator pairs go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer &num, const Integer &den);

/// Parses "p/q" or "p". Throws UsageError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", with q = 1 spelled out, so the format is uniform.
std::string format_rational(const Rational &r);

bool is_integer(const Rational &r);

/// Exact square root if r is the square of a rational.
bool rational_sqrt(const Rational &r, Rational &root);

double to_double(const Rational &r);

} // namespace adeh
