#include "adeh/cyclo.hpp"

#include "adeh/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace adeh {

// ---------------------------------------------------------------------------
// CycloField

CycloField::CycloField(int order)
    : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_poly(order)) {
  // x^k mod Φ_n for k = 0 .. max(2φ-2, n-1), built by repeated multiplication by x.
  const int d = degree_;
  const int needed = std::max(2 * d - 2, order_ - 1);
  std::vector<std::vector<Rational>> all;
  all.reserve(needed + 1);
  for (int k = 0; k < d && k <= needed; ++k) {
    std::vector<Rational> e(d, Rational(0));
    e[k] = 1;
    all.push_back(std::move(e));
  }
  for (int k = d; k <= needed; ++k) {
    const auto &prev = all.back();
    std::vector<Rational> next(d, Rational(0));
    for (int i = d - 1; i >= 1; --i)
      next[i] = prev[i - 1];
    // Φ_n is monic, so x^d ≡ -(Φ_n - x^d).
    const Rational carry = prev[d - 1];
    if (sgn(carry) != 0)
      for (int i = 0; i < d; ++i)
        next[i] -= carry * Rational(modulus_[i]);
    all.push_back(std::move(next));
  }
  for (int k = d; k <= 2 * d - 2; ++k)
    reductions_.push_back(all[k]);
  powers_.assign(all.begin(), all.begin() + order_);
}

std::shared_ptr<const CycloField> CycloField::get(int order) {
  if (order < 1)
    throw UsageError("cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CycloField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto &slot = cache[order];
  if (!slot)
    slot = std::make_shared<const CycloField>(order);
  return slot;
}

const std::vector<Rational> &CycloField::zeta_power(long k) const {
  long r = k % order_;
  if (r < 0)
    r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------
// CycloNum

CycloNum::CycloNum() : CycloNum(1, Rational(0)) {}

CycloNum::CycloNum(int order, const Rational &value)
    : field_(CycloField::get(order)), coeffs_(field_->degree(), Rational(0)) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycloNum::CycloNum(int order, std::vector<Rational> coeffs) : field_(CycloField::get(order)) {
  const int d = field_->degree();
  for (auto &c : coeffs)
    c.canonicalize();
  if (static_cast<int>(coeffs.size()) <= d) {
    coeffs.resize(d, Rational(0));
    coeffs_ = std::move(coeffs);
    return;
  }
  // Longer input: reduce modulo Φ_n.
  QPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  QPoly q, r;
  poly_divmod(p, to_qpoly(field_->modulus()), q, r);
  r.resize(d, Rational(0));
  coeffs_ = std::move(r);
}

CycloNum CycloNum::zeta(int order, long k) {
  auto f = CycloField::get(order);
  return CycloNum(order, f->zeta_power(k));
}

bool CycloNum::is_zero() const {
  for (const auto &c : coeffs_)
    if (sgn(c) != 0)
      return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0)
      return false;
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational())
    throw UsageError("cyclotomic number " + to_string() + " is not rational");
  return coeffs_[0];
}

void CycloNum::require_same_field(const CycloNum &b, const char *op) const {
  if (order() != b.order())
    throw UsageError(std::string("cyclotomic ") + op + ": order mismatch (" +
                     std::to_string(order()) + " vs " + std::to_string(b.order()) + ")");
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

CycloNum &CycloNum::operator+=(const CycloNum &b) {
  require_same_field(b, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycloNum &CycloNum::operator-=(const CycloNum &b) {
  require_same_field(b, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycloNum &CycloNum::operator*=(const Rational &s) {
  for (auto &c : coeffs_)
    c *= s;
  return *this;
}

CycloNum &CycloNum::operator*=(const CycloNum &b) {
  require_same_field(b, "mul");
  const int d = field_->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0)
      continue;
    for (int j = 0; j < d; ++j)
      if (sgn(b.coeffs_[j]) != 0)
        prod[i + j] += coeffs_[i] * b.coeffs_[j];
  }
  for (int k = d; k < 2 * d - 1; ++k) {
    if (sgn(prod[k]) == 0)
      continue;
    const auto &red = field_->reduction(k);
    for (int i = 0; i < d; ++i)
      if (sgn(red[i]) != 0)
        prod[i] += prod[k] * red[i];
  }
  prod.resize(d);
  coeffs_ = std::move(prod);
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero())
    throw ArithmeticError("cyclotomic division by zero");
  if (is_rational())
    return CycloNum(order(), 1 / coeffs_[0]);
  QPoly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  QPoly g;
  QPoly s = poly_gcdex(a, to_qpoly(field_->modulus()), g);
  if (g.size() != 1)
    throw InvariantError("element shares a factor with the cyclotomic modulus");
  return CycloNum(order(), std::move(s));
}

CycloNum &CycloNum::operator/=(const CycloNum &b) {
  require_same_field(b, "div");
  *this *= b.inverse();
  return *this;
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  CycloNum result = one(order());
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return result;
}

CycloNum CycloNum::galois(long k) const {
  const long n = order();
  if (std::gcd(((k % n) + n) % n, n) != 1)
    throw UsageError("galois exponent " + std::to_string(k) + " is not coprime to " +
                     std::to_string(n));
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0)
      continue;
    const auto &img = field_->zeta_power(static_cast<long>(i) * k);
    for (std::size_t j = 0; j < out.size(); ++j)
      if (sgn(img[j]) != 0)
        out[j] += coeffs_[i] * img[j];
  }
  return CycloNum(order(), std::move(out));
}

bool operator==(const CycloNum &a, const CycloNum &b) {
  return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0)
      continue;
    if (!first)
      os << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[i]) < 0)
      os << "-";
    Rational mag = abs(coeffs_[i]);
    if (i == 0 || mag != 1)
      os << mag.get_str();
    if (i > 0)
      os << (i == 0 || mag != 1 ? "*" : "") << "z" << order() << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

CycloNum cyclo_arith(const CycloNum &a, const CycloNum &b, CycloOp op) {
  switch (op) {
  case CycloOp::add:
    return a + b;
  case CycloOp::sub:
    return a - b;
  case CycloOp::mul:
    return a * b;
  case CycloOp::div:
    return a / b;
  }
  throw UsageError("unknown cyclotomic operation");
}

CycloNum cyclo_galois(const CycloNum &a, long k) { return a.galois(k); }

// ---------------------------------------------------------------------------
// Embedding

namespace {

std::string format_big(const BigFloat &x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

BigFloat big_from_rational(const Rational &r) {
  return BigFloat(r.get_num().get_str()) / BigFloat(r.get_den().get_str());
}

} // namespace

std::string ComplexApprox::real_string() const { return format_big(re, digits); }
std::string ComplexApprox::imag_string() const { return format_big(im, digits); }

ComplexApprox embed_complex(const CycloNum &a, int digits) {
  if (digits < 1 || digits > kMaxEmbedDigits)
    throw UsageError("digits must be in 1.." + std::to_string(kMaxEmbedDigits));
  const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
  ComplexApprox out;
  out.re = 0;
  out.im = 0;
  out.condition = 1;
  out.digits = digits;
  const int n = a.order();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const Rational &c = a.coeffs()[k];
    if (sgn(c) == 0)
      continue;
    BigFloat cf = big_from_rational(c);
    BigFloat angle = two_pi * static_cast<long>(k) / n;
    out.re += cf * cos(angle);
    out.im += cf * sin(angle);
    out.condition += abs(cf);
  }
  return out;
}

} // namespace adeh
