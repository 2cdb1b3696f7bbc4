#include "adeh/oracle.hpp"

#include "adeh/errors.hpp"

namespace adeh::oracle {

namespace {

// c (2λ)^p
struct Power {
  Rational c;
  Rational p;
};

Power d_lambda(const Power &x) { return {x.c * 2 * x.p, x.p - 1}; }
Power int_lambda(const Power &x) { return {x.c / (2 * (x.p + 1)), x.p + 1}; }

// I^{(n)} = 2 (d/dλ)^n (2λ)^{-1/2}; negative n integrates.
Power period(int n) {
  Power x{Rational(2), make_rational(-1, 2)};
  for (int k = 0; k < n; ++k)
    x = d_lambda(x);
  for (int k = 0; k < -n; ++k)
    x = int_lambda(x);
  return x;
}

// ζ = (2λ)^{1/2}, so (2λ)^p = ζ^{2p}.
int zeta_degree(const Power &x) {
  const Rational z = 2 * x.p;
  if (z.get_den() != 1)
    throw InvariantError("oracle: fractional ζ power");
  return static_cast<int>(z.get_num().get_si());
}

struct SKey {
  int zeta;
  Exps y;
  Exps d;
  int hbar_half;
  friend bool operator<(const SKey &a, const SKey &b) {
    return std::tie(a.zeta, a.y, a.d, a.hbar_half) < std::tie(b.zeta, b.y, b.d, b.hbar_half);
  }
};
using Series = std::map<SKey, Rational>;

Series multiply(const Series &a, const Series &b, int max_zeta) {
  Series out;
  for (const auto &[ka, ca] : a)
    for (const auto &[kb, cb] : b) {
      const int z = ka.zeta + kb.zeta;
      if (z > max_zeta || z < -max_zeta)
        continue;
      SKey k{z, ka.y, ka.d, ka.hbar_half + kb.hbar_half};
      for (std::size_t i = 0; i < k.y.size(); ++i) {
        k.y[i] += kb.y[i];
        k.d[i] += kb.d[i];
      }
      out[k] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

// exp(x) = Σ x^n / n!, truncated in ζ.
Series exponential(const Series &x, int vars, int max_zeta) {
  const SKey one{0, Exps(vars, 0), Exps(vars, 0), 0};
  Series total{{one, Rational(1)}};
  Series term = total;
  for (int n = 1; !term.empty(); ++n) {
    term = multiply(term, x, max_zeta);
    for (auto &[k, c] : term)
      c /= n;
    for (const auto &[k, c] : term)
      total[k] += c;
  }
  return total;
}

Rational double_factorial(int n) {
  Rational r = 1;
  for (int k = n; k > 1; k -= 2)
    r *= k;
  return r;
}

} // namespace

std::map<OpKey, Rational> q_operator(int max_weight) {
  const int vars = (max_weight + 1) / 2;
  std::map<OpKey, Rational> op;
  for (int sign : {1, -1}) {
    Series ys, ds;
    for (int k = 0; k < vars; ++k) {
      // f_n = (-1)^n I^{(n)}; the root -α flips every period.
      auto f = [&](int n) {
        Power x = period(n);
        x.c *= sign * ((n % 2 == 0) ? 1 : -1);
        return x;
      };
      const Power fy = f(-1 - k);
      SKey ky{zeta_degree(fy), Exps(vars, 0), Exps(vars, 0), -1};
      ky.y[k] = 1;
      ys[ky] = 2 * (k % 2 == 0 ? -1 : 1) * fy.c; // 2 (-1)^{k+1} f_{-1-k}
      const Power fd = f(k);
      SKey kd{zeta_degree(fd), Exps(vars, 0), Exps(vars, 0), 1};
      kd.d[k] = 1;
      ds[kd] = -fd.c;
    }
    const Series prod = multiply(exponential(ys, vars, max_weight), exponential(ds, vars, max_weight), 0);
    for (const auto &[k, c] : prod)
      op[OpKey{k.y, k.d, k.hbar_half}] += c;
  }
  // - 16 (l + 1/8), l = Σ (2k+1) y_k ∂_{y_k} in q-variables.
  op[OpKey{Exps(vars, 0), Exps(vars, 0), 0}] -= 2;
  for (int k = 0; k < vars; ++k) {
    OpKey key{Exps(vars, 0), Exps(vars, 0), 0};
    key.y[k] = 1;
    key.d[k] = 1;
    op[key] -= 16 * (2 * k + 1);
  }
  for (auto it = op.begin(); it != op.end();)
    it = sgn(it->second) == 0 ? op.erase(it) : std::next(it);
  return op;
}

namespace {

Rational factorial(const Exps &e) {
  Rational r = 1;
  for (int x : e)
    for (int k = 2; k <= x; ++k)
      r *= k;
  return r;
}

void enumerate(int vars, int budget, Exps &cur, std::size_t k, std::vector<Exps> &out) {
  if (static_cast<int>(k) == vars) {
    out.push_back(cur);
    return;
  }
  const int w = 2 * static_cast<int>(k) + 1;
  for (int e = 0; e * w <= budget; ++e) {
    cur[k] = e;
    enumerate(vars, budget - e * w, cur, k + 1, out);
  }
  cur[k] = 0;
}

} // namespace

A1System a1_system(int max_weight) {
  A1System sys;
  sys.max_weight = max_weight;
  sys.vars = (max_weight + 1) / 2;
  // The engine's normalisation is the q-form divided by 4; then q_k = (2k+1)!! t_{2k+1}
  // turns y^q_k into (2k+1)!! y_m and ∂_{q_k} into ∂_m / (2k+1)!!.
  for (const auto &[k, c] : q_operator(max_weight)) {
    Rational v = c / 4;
    for (int i = 0; i < sys.vars; ++i) {
      const Rational df = double_factorial(2 * i + 1);
      for (int e = 0; e < k.y[i]; ++e)
        v *= df;
      for (int e = 0; e < k.d[i]; ++e)
        v /= df;
    }
    sys.op[k] = v;
  }

  std::vector<Exps> ys;
  Exps cur(sys.vars, 0);
  enumerate(sys.vars, max_weight, cur, 0, ys);
  for (const auto &cm : ys) {
    auto &eq = sys.equations[cm];
    for (const auto &[k, c] : sys.op) {
      Exps r(sys.vars), d(sys.vars);
      bool divides = true;
      int deg = 0;
      for (int i = 0; i < sys.vars; ++i) {
        r[i] = cm[i] - k.y[i];
        divides = divides && r[i] >= 0;
        d[i] = r[i] + k.d[i];
        deg += d[i];
      }
      if (!divides || deg % 2 != 0)
        continue;
      eq[{d, k.hbar_half}] += c / factorial(r);
    }
    for (auto it = eq.begin(); it != eq.end();)
      it = sgn(it->second) == 0 ? eq.erase(it) : std::next(it);
  }
  return sys;
}

} // namespace adeh::oracle
