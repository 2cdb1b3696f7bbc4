#include "adeh/diffpoly.hpp"

#include "adeh/errors.hpp"

#include <algorithm>
#include <functional>

namespace adeh {

std::string to_string(const HVar &v) {
  std::string s = std::to_string(v.m);
  if (v.tag != 0)
    s += "'" + std::to_string(v.tag);
  return s;
}

int weight(const Monomial &mono) {
  int w = 0;
  for (const auto &[v, e] : mono)
    w += v.weight() * e;
  return w;
}

int degree(const Monomial &mono) {
  int d = 0;
  for (const auto &[v, e] : mono)
    d += e;
  return d;
}

Monomial mono_mul(const Monomial &a, const Monomial &b) {
  Monomial out = a;
  for (const auto &[v, e] : b)
    out[v] += e;
  return out;
}

bool mono_divides(const Monomial &b, const Monomial &a) {
  for (const auto &[v, e] : b) {
    auto it = a.find(v);
    if (it == a.end() || it->second < e)
      return false;
  }
  return true;
}

Monomial mono_div(const Monomial &a, const Monomial &b) {
  if (!mono_divides(b, a))
    throw UsageError("monomial division with remainder");
  Monomial out = a;
  for (const auto &[v, e] : b)
    if ((out[v] -= e) == 0)
      out.erase(v);
  return out;
}

Integer mono_factorial(const Monomial &mono) {
  Integer f = 1;
  for (const auto &[v, e] : mono)
    for (int k = 2; k <= e; ++k)
      f *= k;
  return f;
}

std::string to_string(const Monomial &mono, const char *symbol) {
  if (mono.empty())
    return "1";
  std::string s;
  for (const auto &[v, e] : mono) {
    if (!s.empty())
      s += "*";
    s += symbol + to_string(v);
    if (e > 1)
      s += "^" + std::to_string(e);
  }
  return s;
}

std::vector<Monomial> monomials_up_to(const std::vector<HVar> &vars, int max_weight) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == vars.size()) {
      out.push_back(cur);
      return;
    }
    const int w = vars[i].weight();
    for (int e = 0; e * w <= budget; ++e) {
      if (e > 0)
        cur[vars[i]] = e;
      rec(i + 1, budget - e * w);
    }
    cur.erase(vars[i]);
  };
  rec(0, max_weight);
  std::sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
    const int wa = weight(a), wb = weight(b);
    return wa != wb ? wa < wb : a < b;
  });
  return out;
}

void DiffPoly::add(const TermKey &key, const CycloNum &c) {
  if (c.is_zero())
    return;
  if (c.order() != order_)
    throw UsageError("DiffPoly coefficient field mismatch");
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

DiffPoly &DiffPoly::operator+=(const DiffPoly &b) {
  for (const auto &[k, c] : b.terms_)
    add(k, c);
  return *this;
}

DiffPoly &DiffPoly::operator-=(const DiffPoly &b) {
  for (const auto &[k, c] : b.terms_)
    add(k, -c);
  return *this;
}

DiffPoly &DiffPoly::operator*=(const CycloNum &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[k, c] : terms_)
    c *= s;
  return *this;
}

CycloNum DiffPoly::constant() const {
  auto it = terms_.find(TermKey{});
  return it == terms_.end() ? CycloNum::zero(order_) : it->second;
}

} // namespace adeh
