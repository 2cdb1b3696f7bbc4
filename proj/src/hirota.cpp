#include "adeh/hirota.hpp"

#include "adeh/errors.hpp"

#include <algorithm>

namespace adeh {

std::vector<HVar> hirota_variables(const CoxeterData &cd, int max_weight) {
  std::vector<HVar> vars;
  for (int m = 1; m <= max_weight; ++m)
    for (const auto &e : cd.eigenbasis)
      if (e.exponent == m % cd.h)
        vars.push_back(HVar{m, e.tag});
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::size_t eigen_index(const CoxeterData &cd, const HVar &v) {
  if (v.m >= 1)
    for (std::size_t a = 0; a < cd.eigenbasis.size(); ++a)
      if (cd.eigenbasis[a].exponent == v.m % cd.h && cd.eigenbasis[a].tag == v.tag)
        return a;
  throw UsageError("variable t_" + to_string(v) + " is not in E_+ for " + cd.type.name());
}

DiffPoly KernelSeries::at(int degree, int order) const {
  auto it = by_degree.find(degree);
  return it == by_degree.end() ? DiffPoly(order) : it->second;
}

RootCoordinates root_coordinates(const RootSystem &rs, const CoxeterData &cd, const IntVector &root) {
  RootCoordinates rc;
  rc.beta = beta_coordinates(cd, {root}).front();
  CycloVector r;
  for (long x : root)
    r.emplace_back(cd.h, Rational(x));
  for (const auto &e : cd.eigenbasis)
    rc.dual.push_back(rs.pair(r, e.vec) * Rational(cd.h));
  return rc;
}

namespace {

// Coefficients of exp(Σ_v c_v X_v) on each monomial, X_v commuting.
std::vector<CycloNum> exp_coefficients(const std::vector<Monomial> &monos,
                                       const std::map<HVar, CycloNum> &c, int order) {
  std::vector<CycloNum> out;
  out.reserve(monos.size());
  for (const auto &mono : monos) {
    CycloNum v = CycloNum::one(order);
    for (const auto &[var, e] : mono)
      v *= c.at(var).pow(e);
    v *= make_rational(Integer(1), mono_factorial(mono));
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

KernelSeries vertex_kernel(const CoxeterData &cd, const CycloNum &scale, const RootCoordinates &coords,
                           int max_zeta, bool zeta0_only) {
  if (max_zeta < 0)
    throw UsageError("max_zeta must be non-negative");
  const int order = cd.h;
  const std::vector<HVar> vars = hirota_variables(cd, max_zeta);
  std::map<HVar, CycloNum> yc, dc;
  for (const auto &v : vars) {
    const std::size_t a = eigen_index(cd, v);
    yc.emplace(v, coords.beta[a] * Rational(2));
    dc.emplace(v, -coords.dual[a] * make_rational(1, v.m));
  }
  const std::vector<Monomial> monos = monomials_up_to(vars, max_zeta);
  const std::vector<CycloNum> ycoef = exp_coefficients(monos, yc, order);
  const std::vector<CycloNum> dcoef = exp_coefficients(monos, dc, order);

  KernelSeries ks;
  ks.max_zeta = max_zeta;
  for (std::size_t p = 0; p < monos.size(); ++p) {
    if (ycoef[p].is_zero())
      continue;
    const int wa = weight(monos[p]);
    const CycloNum sy = scale * ycoef[p];
    for (std::size_t q = 0; q < monos.size(); ++q) {
      const int wb = weight(monos[q]);
      if (zeta0_only && wb != wa)
        continue;
      if (dcoef[q].is_zero())
        continue;
      const int deg = wa - wb;
      auto it = ks.by_degree.try_emplace(deg, DiffPoly(order)).first;
      it->second.add(TermKey{degree(monos[q]) - degree(monos[p]), monos[p], monos[q]}, sy * dcoef[q]);
    }
  }
  return ks;
}

KernelSeries orbit_kernel(const CoxeterData &cd, const CoeffTable &ct, std::size_t i, int max_zeta) {
  RootCoordinates rc{cd.beta.at(i), cd.beta_dual.at(i)};
  return vertex_kernel(cd, ct.g_values.at(i), rc, max_zeta);
}

std::map<int, int> HirotaSystem::nonzero_counts() const {
  std::map<int, int> counts;
  for (const auto &eq : equations) {
    counts.try_emplace(eq.weight(), 0);
    if (!eq.poly.is_zero())
      ++counts[eq.weight()];
  }
  return counts;
}

DiffPoly rhs_operator(int h, const std::vector<HVar> &vars, const Rational &rho_rho) {
  DiffPoly rhs(h);
  rhs.add(TermKey{}, CycloNum(h, rho_rho));
  for (const auto &v : vars)
    rhs.add(TermKey{0, {{v, 1}}, {{v, 1}}}, CycloNum(h, Rational(2 * h * v.m)));
  return rhs;
}

std::vector<HirotaEquation> equations_from_operator(const DiffPoly &op, const std::vector<HVar> &vars,
                                                    int max_weight, ExecPolicy policy) {
  struct Part {
    Monomial d;
    int hbar_half;
    CycloNum c;
  };
  std::map<Monomial, std::vector<Part>> by_y;
  for (const auto &[k, c] : op.terms())
    if (weight(k.y) <= max_weight)
      by_y[k.y].push_back(Part{k.d, k.hbar_half, c});

  const std::vector<Monomial> ys = monomials_up_to(vars, max_weight);
  std::vector<HirotaEquation> eqs(ys.size());
  auto build = [&](std::size_t idx) {
    const Monomial &c_mono = ys[idx];
    HirotaEquation eq{c_mono, DiffPoly(op.order())};
    for (const auto &[a_mono, parts] : by_y) {
      if (!mono_divides(a_mono, c_mono))
        continue;
      const Monomial r = mono_div(c_mono, a_mono);
      const Rational inv = make_rational(Integer(1), mono_factorial(r));
      for (const auto &p : parts) {
        Monomial d = mono_mul(r, p.d);
        if (degree(d) % 2 != 0)
          continue; // odd Hirota derivatives of Φ·Φ vanish
        eq.poly.add(TermKey{p.hbar_half, {}, std::move(d)}, p.c * inv);
      }
    }
    eqs[idx] = std::move(eq);
  };
  const long n = static_cast<long>(ys.size());
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long idx = 0; idx < n; ++idx)
      build(static_cast<std::size_t>(idx));
  } else {
    for (long idx = 0; idx < n; ++idx)
      build(static_cast<std::size_t>(idx));
  }
  return eqs;
}

HirotaSystem generate(const RootSystem &rs, const CoxeterData &cd, const CoeffTable &ct, int max_weight,
                      ExecPolicy policy) {
  if (max_weight < 0)
    throw UsageError("max_weight must be non-negative");
  HirotaSystem sys;
  sys.type = rs.type;
  sys.h = cd.h;
  sys.rank = rs.rank;
  sys.max_weight = max_weight;
  sys.exponents = cd.exponents;
  sys.variables = hirota_variables(cd, max_weight);
  sys.rho_rho = rho_norm(rs.rank, cd.h);

  const long n = static_cast<long>(cd.reps.size());
  std::vector<DiffPoly> parts(n, DiffPoly(cd.h));
  auto kernel0 = [&](long i) {
    RootCoordinates rc{cd.beta[i], cd.beta_dual[i]};
    parts[i] = vertex_kernel(cd, ct.g_values[i], rc, max_weight, true).at(0, cd.h);
  };
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long i = 0; i < n; ++i)
      kernel0(i);
  } else {
    for (long i = 0; i < n; ++i)
      kernel0(i);
  }
  sys.op = DiffPoly(cd.h);
  for (const auto &p : parts)
    sys.op += p;
  sys.op -= rhs_operator(cd.h, sys.variables, sys.rho_rho);

  sys.weight0_scalar = CycloNum(cd.h, -sys.rho_rho);
  for (const auto &g : ct.g_values)
    sys.weight0_scalar += g;
  sys.equations = equations_from_operator(sys.op, sys.variables, max_weight, policy);
  return sys;
}

// ---------------------------------------------------------------------------

QVariable q_variable(int h, const HVar &t) {
  if (t.m < 1 || t.m % h == 0)
    throw UsageError("t_" + to_string(t) + " has no q-counterpart");
  QVariable q;
  q.t = t;
  q.exponent = t.m % h;
  q.k = t.m / h;
  q.factor = 1;
  for (int r = 0; r <= q.k; ++r)
    q.factor *= q.exponent + r * h;
  return q;
}

HVar t_variable(int h, int exponent, int tag, int k) { return HVar{exponent + k * h, tag}; }

std::vector<QVariable> to_q_variables(const HirotaSystem &sys) {
  std::vector<QVariable> out;
  for (const auto &v : sys.variables)
    out.push_back(q_variable(sys.h, v));
  return out;
}

PeriodTerm PeriodTerm::derivative(int h) const {
  return PeriodTerm{coeff * (e * Rational(h)), e - 1};
}

PeriodTerm PeriodTerm::integral(int h) const {
  if (e == -1)
    throw InvariantError("logarithmic period term");
  return PeriodTerm{coeff * (1 / (Rational(h) * (e + 1))), e + 1};
}

long PeriodTerm::zeta_power(int h) const {
  const Rational p = e * Rational(h);
  if (!is_integer(p))
    throw InvariantError("fractional power of ζ");
  return p.get_num().get_si();
}

LinearCoefficient presentation_coefficient(const CoxeterData &cd, std::size_t i, const HVar &v) {
  const int h = cd.h;
  const std::size_t a = eigen_index(cd, v);
  const QVariable q = q_variable(h, v);
  const int m_a = q.exponent;
  const int m_dual = cd.eigenbasis[cd.eigenbasis[a].partner].exponent;
  const Rational factor(q.factor);

  // (I^{(-1)}, ψ_a) = β m_a^{-1} (hλ)^{m_a/h}; k integrations give I^{(-1-k)}.
  PeriodTerm y{cd.beta[i][a] * make_rational(1, m_a), make_rational(m_a, h)};
  for (int r = 0; r < q.k; ++r)
    y = y.integral(h);
  // The ∂ side pairs with the dual direction; k+1 derivatives give I^{(k)}.
  PeriodTerm d{cd.beta_dual[i][a] * make_rational(1, m_dual), make_rational(m_dual, h)};
  for (int r = 0; r <= q.k; ++r)
    d = d.derivative(h);

  LinearCoefficient lc;
  lc.y_coeff = y.coeff * (Rational(2) * factor);
  lc.y_power = y.zeta_power(h);
  const Rational sign = q.k % 2 == 0 ? Rational(-1) : Rational(1); // -f_k = -(-1)^k I^{(k)}
  lc.d_coeff = d.coeff * (sign / factor);
  lc.d_power = d.zeta_power(h);
  return lc;
}

LinearCoefficient kernel_coefficient(const CoxeterData &cd, const CoeffTable &ct, std::size_t i,
                                     const HVar &v) {
  const KernelSeries ks = orbit_kernel(cd, ct, i, v.m);
  const CycloNum inv_g = ct.g_values.at(i).inverse();
  LinearCoefficient lc;
  lc.y_power = v.m;
  lc.d_power = -v.m;
  lc.y_coeff = CycloNum::zero(cd.h);
  lc.d_coeff = CycloNum::zero(cd.h);
  const DiffPoly up = ks.at(v.m, cd.h), down = ks.at(-v.m, cd.h);
  const auto &ty = up.terms();
  if (auto it = ty.find(TermKey{-1, {{v, 1}}, {}}); it != ty.end())
    lc.y_coeff = it->second * inv_g;
  const auto &td = down.terms();
  if (auto it = td.find(TermKey{1, {}, {{v, 1}}}); it != td.end())
    lc.d_coeff = it->second * inv_g;
  return lc;
}

// ---------------------------------------------------------------------------

std::set<HVar> TauSeries::variables() const {
  std::set<HVar> out;
  for (const auto &[mono, p] : coeffs)
    for (const auto &[v, e] : mono)
      out.insert(v);
  return out;
}

void TauSeries::validate(int h, const std::vector<int> &exponents) const {
  if (truncation_weight < 0)
    throw UsageError("truncation_weight must be non-negative");
  for (const auto &[mono, p] : coeffs) {
    if (weight(mono) > truncation_weight)
      throw UsageError("tau monomial " + to_string(mono, "t") + " exceeds truncation weight " +
                       std::to_string(truncation_weight));
    for (const auto &[v, e] : mono) {
      const long mult = v.m >= 1 ? std::count(exponents.begin(), exponents.end(), v.m % h) : 0;
      if (mult == 0 || e <= 0 || v.tag < 0 || v.tag >= mult)
        throw UsageError("tau variable t_" + to_string(v) + " is not in E_+");
    }
  }
}

void TauSeries::validate(const CoxeterData &cd) const { validate(cd.h, cd.exponents); }

namespace {

using Series = std::map<Monomial, HbarPoly>;
using Bilinear = std::map<std::pair<Monomial, int>, Rational>;

Series derivative(const TauSeries &tau, const Monomial &d, int max_weight) {
  Series out;
  for (const auto &[x, p] : tau.coeffs) {
    if (!mono_divides(d, x))
      continue;
    Monomial y = mono_div(x, d);
    if (weight(y) > max_weight)
      continue;
    const Rational f(mono_factorial(x) / mono_factorial(y));
    HbarPoly &dst = out[std::move(y)];
    for (const auto &[hp, c] : p)
      dst[hp] += c * f;
  }
  return out;
}

std::vector<Monomial> divisors(const Monomial &d) {
  std::vector<Monomial> out{Monomial{}};
  for (const auto &[v, e] : d) {
    std::vector<Monomial> next;
    for (const auto &base : out)
      for (int k = 0; k <= e; ++k) {
        Monomial m = base;
        if (k > 0)
          m[v] = k;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

// Σ_{D1+D2=D} D!/(D1!D2!) (-1)^{|D2|} ∂^{D1}Φ ∂^{D2}Φ, truncated at max_weight.
Bilinear hirota_derivative(const TauSeries &tau, const Monomial &d, int max_weight,
                           std::map<Monomial, Series> &cache) {
  auto deriv = [&](const Monomial &m) -> const Series & {
    auto it = cache.find(m);
    if (it == cache.end())
      it = cache.emplace(m, derivative(tau, m, max_weight)).first;
    return it->second;
  };
  const Integer d_fact = mono_factorial(d);
  Bilinear out;
  for (const auto &d1 : divisors(d)) {
    const Monomial d2 = mono_div(d, d1);
    const Integer binom = d_fact / (mono_factorial(d1) * mono_factorial(d2));
    const Rational w(degree(d2) % 2 == 0 ? Integer(binom) : Integer(-binom));
    const Series &s1 = deriv(d1);
    const Series &s2 = deriv(d2);
    for (const auto &[x1, p1] : s1)
      for (const auto &[x2, p2] : s2) {
        if (weight(x1) + weight(x2) > max_weight)
          continue;
        const Monomial x = mono_mul(x1, x2);
        for (const auto &[h1, c1] : p1)
          for (const auto &[h2, c2] : p2)
            out[{x, h1 + h2}] += w * c1 * c2;
      }
  }
  return out;
}

} // namespace

ResidualReport apply(const HirotaSystem &sys, const TauSeries &tau, ExecPolicy policy) {
  if (tau.truncation_weight < sys.max_weight)
    throw UsageError("tau series truncated at weight " + std::to_string(tau.truncation_weight) +
                     "; requires truncation ≥ " + std::to_string(sys.max_weight));
  tau.validate(sys.h, sys.exponents);
  ResidualReport report;
  report.valid_weight = tau.truncation_weight - sys.max_weight;
  report.equations_checked = sys.equations.size();

  std::vector<std::vector<Residual>> per_eq(sys.equations.size());
  auto evaluate = [&](std::size_t idx) {
    const HirotaEquation &eq = sys.equations[idx];
    std::map<Monomial, Series> cache;
    std::map<std::pair<Monomial, int>, CycloNum> acc;
    for (const auto &[key, c] : eq.poly.terms()) {
      const Bilinear b = hirota_derivative(tau, key.d, report.valid_weight, cache);
      for (const auto &[xk, r] : b) {
        if (sgn(r) == 0)
          continue;
        auto slot = std::make_pair(xk.first, xk.second + key.hbar_half);
        auto it = acc.try_emplace(slot, CycloNum::zero(sys.h)).first;
        it->second += c * r;
      }
    }
    for (auto &[slot, v] : acc)
      if (!v.is_zero())
        per_eq[idx].push_back(Residual{eq.y, slot.first, slot.second, std::move(v)});
  };
  const long n = static_cast<long>(sys.equations.size());
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long idx = 0; idx < n; ++idx)
      evaluate(static_cast<std::size_t>(idx));
  } else {
    for (long idx = 0; idx < n; ++idx)
      evaluate(static_cast<std::size_t>(idx));
  }
  for (auto &v : per_eq)
    for (auto &r : v)
      report.residuals.push_back(std::move(r));
  return report;
}

} // namespace adeh
