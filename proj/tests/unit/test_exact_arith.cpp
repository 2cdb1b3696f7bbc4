#include "adeh/cyclo.hpp"
#include "adeh/errors.hpp"
#include "adeh/poly.hpp"
#include "adeh/rational.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

using namespace adeh;

namespace {

ZPoly zpoly(std::initializer_list<long> c) {
  ZPoly p;
  for (long x : c)
    p.emplace_back(x);
  return p;
}

CycloNum random_element(std::mt19937 &rng, int order) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int k = 0; k < euler_phi(order); ++k)
    c.push_back(make_rational(num(rng), den(rng)));
  return CycloNum(order, c);
}

CycloNum random_nonzero(std::mt19937 &rng, int order) {
  for (;;) {
    CycloNum a = random_element(rng, order);
    if (!a.is_zero())
      return a;
  }
}

BigFloat abs_big(const BigFloat &x) { return x < 0 ? BigFloat(-x) : x; }

} // namespace

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(format_rational(make_rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(5)) == "5/1");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
  Rational r;
  CHECK(rational_sqrt(make_rational(9, 4), r));
  CHECK(r == make_rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(3), r));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == zpoly({-1, 1}));
  CHECK(cyclotomic_poly(3) == zpoly({1, 1, 1}));
  CHECK(cyclotomic_poly(12) == zpoly({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(30).size() == 9);
  CHECK(euler_phi(30) == 8);
  CHECK(euler_phi(18) == 6);
}

TEST_CASE("polynomial division and extended gcd") {
  const QPoly a = to_qpoly(zpoly({-1, 0, 0, 1})); // x^3 - 1
  const QPoly b = to_qpoly(zpoly({-1, 1}));       // x - 1
  QPoly q, r;
  poly_divmod(a, b, q, r);
  CHECK(q == to_qpoly(zpoly({1, 1, 1})));
  CHECK(r.empty());
  CHECK_THROWS_AS(poly_divmod(a, QPoly{}, q, r), ArithmeticError);

  const QPoly m = to_qpoly(cyclotomic_poly(5));
  const QPoly x = to_qpoly(zpoly({2, 1})); // x + 2
  QPoly g;
  const QPoly s = poly_gcdex(x, m, g);
  CHECK(g == QPoly{Rational(1)});
  QPoly rem;
  poly_divmod(poly_mul(s, x), m, q, rem);
  CHECK(rem == QPoly{Rational(1)});
}

TEST_CASE("long coefficient vectors are reduced modulo the cyclotomic polynomial") {
  // x^4 = -1 - x - x^2 - x^3 in Q(ζ_5).
  std::vector<Rational> c(5, Rational(0));
  c[4] = 1;
  CHECK(CycloNum(5, c) == CycloNum(5, {Rational(-1), Rational(-1), Rational(-1), Rational(-1)}));
  CHECK(CycloNum(5, c) == CycloNum::zeta(5, 4));
}

TEST_CASE("field operations on roots of unity") {
  const CycloNum z3 = CycloNum::zeta(3);
  CHECK((CycloNum::one(3) + z3 + z3 * z3).is_zero());
  for (int n : {3, 5, 8, 12, 18, 30})
    CHECK(CycloNum::zeta(n) * CycloNum::zeta(n, n - 1) == CycloNum::one(n));
  const CycloNum s3 = CycloNum::zeta(12) + CycloNum::zeta(12, 11);
  CHECK(s3 * s3 == CycloNum(12, Rational(3)));
  CHECK(CycloNum::zeta(12, 12) == CycloNum::one(12));
  CHECK(CycloNum::zeta(12, -1) == CycloNum::zeta(12, 11));
  CHECK(z3.pow(-1) == z3 * z3);
  CHECK(z3.pow(0) == CycloNum::one(3));
}

TEST_CASE("errors are typed") {
  CHECK_THROWS_AS(CycloNum::zero(5).inverse(), ArithmeticError);
  CHECK_THROWS_AS(CycloNum::one(3) + CycloNum::one(4), UsageError);
  CHECK_THROWS_AS(CycloNum::zeta(6).rational_value(), UsageError);
  CHECK_THROWS_AS(embed_complex(CycloNum::one(3), kMaxEmbedDigits + 1), UsageError);
  CHECK_THROWS_AS(CycloNum::zeta(12).galois(2), UsageError);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int order : {5, 12, 18, 30}) {
    CAPTURE(order);
    for (int trial = 0; trial < 100; ++trial) {
      const CycloNum a = random_element(rng, order), b = random_element(rng, order),
                     c = random_element(rng, order);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == CycloNum::zero(order));
      CHECK(a + (-a) == CycloNum::zero(order));
      const CycloNum d = random_nonzero(rng, order);
      CHECK(d * d.inverse() == CycloNum::one(order));
      CHECK((a / d) * d == a);
    }
  }
}

TEST_CASE("galois action") {
  const CycloNum z3 = CycloNum::zeta(3);
  CHECK(z3.galois(2) == CycloNum(3, {Rational(-1), Rational(-1)}));
  std::mt19937 rng(11);
  const int n = 30;
  for (int trial = 0; trial < 100; ++trial) {
    const CycloNum a = random_element(rng, n), b = random_element(rng, n);
    for (long k : {7L, 11L, 13L})
      for (long k2 : {17L, 19L, 29L}) {
        CHECK(a.galois(k).galois(k2) == a.galois((k * k2) % n));
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      }
    const CycloNum real = a + a.conj();
    CHECK(real.galois(n - 1) == real);
    CHECK(real.is_real());
  }
}

TEST_CASE("complex embedding") {
  const ComplexApprox i = embed_complex(CycloNum::zeta(4));
  CHECK(abs_big(i.re) < BigFloat("1e-14"));
  CHECK(abs_big(i.im - 1) < BigFloat("1e-14"));

  const ComplexApprox s3 = embed_complex(CycloNum::zeta(12) + CycloNum::zeta(12, 11), 40);
  CHECK(abs_big(s3.re - boost::multiprecision::sqrt(BigFloat(3))) < BigFloat("1e-38"));
  CHECK(abs_big(s3.im) < BigFloat("1e-38"));

  const CycloNum g1 = CycloNum(12, Rational(16)) + (CycloNum::zeta(12) + CycloNum::zeta(12, 11)) * Rational(8);
  CHECK(embed_complex(g1).real() == doctest::Approx(16 + 8 * std::sqrt(3.0)).epsilon(1e-14));

  // Φ_n(ζ_n) vanishes numerically.
  for (int n : {5, 12, 18, 30}) {
    const ZPoly phi = cyclotomic_poly(n);
    const int digits = 30;
    BigFloat re = 0, im = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
      const ComplexApprox z = embed_complex(CycloNum::zeta(n, static_cast<long>(k)), digits);
      re += BigFloat(phi[k].get_str()) * z.re;
      im += BigFloat(phi[k].get_str()) * z.im;
    }
    CHECK(abs_big(re) < BigFloat("1e-28"));
    CHECK(abs_big(im) < BigFloat("1e-28"));
  }
}

TEST_CASE("realness agrees with the embedding") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const CycloNum a = random_element(rng, 18);
    const CycloNum b = trial % 2 ? a + a.conj() : a;
    const ComplexApprox z = embed_complex(b, 20);
    CHECK(b.is_real() == (abs_big(z.im) < BigFloat("1e-18")));
  }
}
