#pragma once

#include "adeh/rational.hpp"

#include <vector>

namespace adeh {

/// Dense univariate polynomial, coefficient k multiplies x^k. Kept trimmed
/// (no trailing zeros); the zero polynomial is the empty vector.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

void trim(QPoly &p);
int degree(const QPoly &p); // -1 for zero

QPoly poly_add(const QPoly &a, const QPoly &b);
QPoly poly_sub(const QPoly &a, const QPoly &b);
QPoly poly_mul(const QPoly &a, const QPoly &b);

/// a = q*b + r with deg r < deg b. Throws ArithmeticError when b is zero.
void poly_divmod(const QPoly &a, const QPoly &b, QPoly &q, QPoly &r);

/// Returns s with s*a ≡ g (mod m) where g = gcd(a, m) normalised monic.
QPoly poly_gcdex(const QPoly &a, const QPoly &m, QPoly &g);

/// n-th cyclotomic polynomial, by dividing x^n - 1 by Φ_d for the proper divisors d.
ZPoly cyclotomic_poly(int n);

int euler_phi(int n);

QPoly to_qpoly(const ZPoly &p);

} // namespace adeh
