#pragma once

#include "adeh/poly.hpp"
#include "adeh/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <memory>
#include <string>
#include <vector>

namespace adeh {

/// The field Q(ζ_n) in the power basis 1, ζ, ..., ζ^{φ(n)-1}, reduced modulo Φ_n.
/// Instances are interned per order and shared read-only.
class CycloField {
public:
  static std::shared_ptr<const CycloField> get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  const ZPoly &modulus() const { return modulus_; }

  /// Power-basis coordinates of ζ^k for any integer k.
  const std::vector<Rational> &zeta_power(long k) const;

  /// Coordinates of x^k mod Φ_n for degree() <= k <= 2*degree()-2.
  const std::vector<Rational> &reduction(int k) const { return reductions_[k - degree_]; }

  explicit CycloField(int order);

private:
  int order_;
  int degree_;
  ZPoly modulus_;
  std::vector<std::vector<Rational>> reductions_;
  std::vector<std::vector<Rational>> powers_;
};

/// Exact element of Q(ζ_n). Immutable value type; all operations return new values.
class CycloNum {
public:
  /// Zero of Q (order 1). Mainly so containers can be default-sized; mixing it
  /// with a different order is still an order mismatch.
  CycloNum();
  CycloNum(int order, const Rational &value);
  CycloNum(int order, std::vector<Rational> coeffs);

  static CycloNum zero(int order) { return CycloNum(order, Rational(0)); }
  static CycloNum one(int order) { return CycloNum(order, Rational(1)); }
  /// ζ_n^k.
  static CycloNum zeta(int order, long k = 1);

  int order() const { return field_->order(); }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  const CycloField &field() const { return *field_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws UsageError unless is_rational().
  Rational rational_value() const;

  CycloNum operator-() const;
  CycloNum &operator+=(const CycloNum &b);
  CycloNum &operator-=(const CycloNum &b);
  CycloNum &operator*=(const CycloNum &b);
  CycloNum &operator/=(const CycloNum &b);
  CycloNum &operator*=(const Rational &s);

  friend CycloNum operator+(CycloNum a, const CycloNum &b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum &b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum &b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum &b) { return a /= b; }
  friend CycloNum operator*(CycloNum a, const Rational &s) { return a *= s; }
  friend CycloNum operator*(const Rational &s, CycloNum a) { return a *= s; }

  friend bool operator==(const CycloNum &a, const CycloNum &b);
  friend bool operator!=(const CycloNum &a, const CycloNum &b) { return !(a == b); }

  CycloNum inverse() const;
  CycloNum pow(long e) const;

  /// Automorphism ζ ↦ ζ^k; k must be coprime to the order.
  CycloNum galois(long k) const;
  /// Complex conjugation, ζ ↦ ζ^{-1}.
  CycloNum conj() const { return galois(-1); }
  bool is_real() const { return *this == conj(); }

  std::string to_string() const;

private:
  std::shared_ptr<const CycloField> field_;
  std::vector<Rational> coeffs_;

  void require_same_field(const CycloNum &b, const char *op) const;
};

enum class CycloOp { add, sub, mul, div };
CycloNum cyclo_arith(const CycloNum &a, const CycloNum &b, CycloOp op);
CycloNum cyclo_galois(const CycloNum &a, long k);

using BigFloat =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

inline constexpr int kMaxEmbedDigits = 50;

struct ComplexApprox {
  BigFloat re;
  BigFloat im;
  /// Error bound: 10^-digits times condition() (sum of |coefficients| + 1).
  BigFloat condition;
  int digits = 15;

  double real() const { return static_cast<double>(re); }
  double imag() const { return static_cast<double>(im); }
  std::string real_string() const;
  std::string imag_string() const;
};

/// Substitutes ζ_n = exp(2πi/n) with `digits` significant decimals (1..50).
ComplexApprox embed_complex(const CycloNum &a, int digits = 15);

} // namespace adeh
