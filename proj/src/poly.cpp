#include "adeh/poly.hpp"

#include "adeh/errors.hpp"

#include <map>
#include <mutex>

namespace adeh {

void trim(QPoly &p) {
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

int degree(const QPoly &p) { return static_cast<int>(p.size()) - 1; }

QPoly poly_add(const QPoly &a, const QPoly &b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] += b[i];
  trim(r);
  return r;
}

QPoly poly_sub(const QPoly &a, const QPoly &b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] -= b[i];
  trim(r);
  return r;
}

QPoly poly_mul(const QPoly &a, const QPoly &b) {
  if (a.empty() || b.empty())
    return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void poly_divmod(const QPoly &a, const QPoly &b, QPoly &q, QPoly &r) {
  if (b.empty())
    throw ArithmeticError("polynomial division by zero");
  r = a;
  trim(r);
  int db = degree(b);
  q.assign(std::max(0, degree(r) - db + 1), Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (degree(r) >= db) {
    int shift = degree(r) - db;
    Rational c = r.back() * lead_inv;
    q[shift] = c;
    for (int j = 0; j <= db; ++j)
      r[shift + j] -= c * b[j];
    trim(r);
  }
  trim(q);
}

QPoly poly_gcdex(const QPoly &a, const QPoly &m, QPoly &g) {
  // Invariant: s0*a ≡ r0, s1*a ≡ r1 (mod m).
  QPoly r0 = m, r1 = a;
  trim(r0);
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, rem;
    poly_divmod(r0, r1, q, rem);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) {
    g.clear();
    return {};
  }
  Rational inv = 1 / r0.back();
  for (auto &c : r0)
    c *= inv;
  for (auto &c : s0)
    c *= inv;
  g = std::move(r0);
  return s0;
}

int euler_phi(int n) {
  if (n < 1)
    throw UsageError("euler_phi requires n >= 1");
  int k = n, result = n;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0)
        k /= p;
      result -= result / p;
    }
  }
  if (k > 1)
    result -= result / k;
  return result;
}

QPoly to_qpoly(const ZPoly &p) {
  QPoly r;
  r.reserve(p.size());
  for (const auto &c : p)
    r.emplace_back(c);
  trim(r);
  return r;
}

ZPoly cyclotomic_poly(int n) {
  if (n < 1)
    throw UsageError("cyclotomic_poly requires n >= 1");
  static std::mutex mutex;
  static std::map<int, ZPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end())
      return it->second;
  }

  QPoly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    QPoly q, r;
    poly_divmod(num, to_qpoly(cyclotomic_poly(d)), q, r);
    if (!r.empty())
      throw InvariantError("cyclotomic division left a remainder");
    num = std::move(q);
  }
  ZPoly out;
  out.reserve(num.size());
  for (const auto &c : num) {
    if (!is_integer(c))
      throw InvariantError("cyclotomic polynomial with non-integer coefficient");
    out.push_back(c.get_num());
  }

  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(n, out);
  return out;
}

} // namespace adeh
