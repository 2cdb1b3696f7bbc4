#include "adeh/coefficients.hpp"

#include "adeh/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adeh {

namespace {

struct Factor {
  std::size_t num; // root index of γ
  std::size_t den; // root index of wγ
  int exponent;    // ⟨α,γ⟩², 1 or 4
};

std::pair<CycloNum, CycloNum> factor_products(const CoxeterData &cd,
                                              const std::vector<Factor> &fs,
                                              std::size_t begin, std::size_t end) {
  CycloNum num = CycloNum::one(cd.h), den = CycloNum::one(cd.h);
  for (std::size_t k = begin; k < end; ++k) {
    num *= cd.kappa_pairings[fs[k].num].pow(fs[k].exponent);
    den *= cd.kappa_pairings[fs[k].den].pow(fs[k].exponent);
  }
  return {num, den};
}

} // namespace

CycloNum coeff_ratio(const RootSystem &rs, const CoxeterData &cd, const IntVector &alpha,
                     const WeylWord &w, ExecPolicy policy) {
  if (!rs.is_root(alpha))
    throw UsageError("coeff_ratio: alpha is not a root");
  std::vector<Factor> fs;
  for (const auto &g : rs.positive_roots) {
    const long p = rs.pair(alpha, g);
    if (p == 0)
      continue;
    fs.push_back({rs.index_of(g), rs.index_of(apply_word(rs, w, g)), static_cast<int>(p * p)});
  }
  for (const auto &f : fs)
    if (cd.kappa_pairings[f.num].is_zero() || cd.kappa_pairings[f.den].is_zero())
      throw InvariantError("κ lies on a mirror");

  CycloNum num = CycloNum::one(cd.h), den = CycloNum::one(cd.h);
  if (policy == ExecPolicy::serial) {
    std::tie(num, den) = factor_products(cd, fs, 0, fs.size());
  } else {
    const int threads = thread_count();
    std::vector<std::pair<CycloNum, CycloNum>> partial(threads, {num, den});
#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
      const int t = omp_get_thread_num(), nt = omp_get_num_threads();
#else
      const int t = 0, nt = 1;
#endif
      const std::size_t chunk = (fs.size() + nt - 1) / nt;
      const std::size_t b = std::min(fs.size(), t * chunk), e = std::min(fs.size(), b + chunk);
      partial[t] = factor_products(cd, fs, b, e);
    }
    for (const auto &[n, d] : partial) {
      num *= n;
      den *= d;
    }
  }
  return num / den;
}

bool is_real_positive(const CycloNum &a) {
  if (!a.is_real() || a.is_zero())
    return false;
  return embed_complex(a, 30).re > 0;
}

CycloNum CoeffTable::a_of(const CoxeterData &cd, const RootSystem &rs, const IntVector &root) const {
  return a_values.at(static_cast<std::size_t>(cd.orbits.orbit_of.at(rs.index_of(root))));
}

Rational consistency_constant(int rank, int h) { return make_rational(rank * (h + 1), 12 * h); }

Rational rho_norm(int rank, int h) { return make_rational(rank * h * (h + 1), 12); }

CoeffTable coeff_table(const RootSystem &rs, const CoxeterData &cd, ExecPolicy policy) {
  CoeffTable t;
  t.type = rs.type;
  t.h = cd.h;
  t.reps = cd.reps;
  const IntVector &a1 = t.reps.front();
  CycloNum sum = CycloNum::zero(cd.h);
  for (const auto &r : t.reps) {
    WeylWord w = weyl_word(rs, a1, r);
    CycloNum ratio = coeff_ratio(rs, cd, a1, w, policy);
    if (!is_real_positive(ratio))
      throw InvariantError("coefficient ratio is not real positive");
    sum += ratio;
    t.words.push_back(std::move(w));
    t.ratios.push_back(std::move(ratio));
  }
  const CycloNum a1_value =
      CycloNum(cd.h, consistency_constant(rs.rank, cd.h)) / (sum * Rational(cd.h));
  const Rational h3(cd.h * cd.h * cd.h);
  for (const auto &r : t.ratios) {
    t.a_values.push_back(r * a1_value);
    t.g_values.push_back(t.a_values.back() * h3);
    t.approx.push_back(embed_complex(t.g_values.back(), 17).real());
  }
  return t;
}

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

CycloNum two_cos(int order, long k) { return CycloNum::zeta(order, k) + CycloNum::zeta(order, -k); }

} // namespace

std::vector<CycloNum> GeneratorTable::evaluate() const {
  std::vector<CycloNum> out;
  for (const auto &row : rows) {
    CycloNum acc = CycloNum::zero(order), power = CycloNum::one(order);
    for (const auto &c : row) {
      acc += power * c;
      power *= generator;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

GeneratorTable e_series_table(int rank) {
  GeneratorTable t;
  switch (rank) {
  case 6:
    t.order = 12;
    t.generator = two_cos(12, 1); // √3
    t.rows = {{q(16), q(8)}, {q(7), q(4)}, {q(16), q(-8)}, {q(7), q(-4)}, {q(16), q(-8)}, {q(16), q(8)}};
    break;
  case 7:
    t.order = 18;
    t.generator = two_cos(18, 1) * q(1, 2);
    t.rows = {{q(27, 2), q(36), q(24)},   {q(225, 2), q(36), q(-144)}, {q(3, 2)},
              {q(147, 2), q(12), q(-96)}, {q(9, 2), q(-72), q(72)},    {q(-21, 2), q(-48), q(72)},
              {q(9, 2), q(36), q(72)}};
    break;
  case 8:
    t.order = 30;
    t.generator = two_cos(30, 1) * q(1, 2);
    t.rows = {{q(33, 2), q(80), q(72), q(-16)},      {q(273, 2), q(132), q(-136), q(-128)},
              {q(-123, 2), q(568), q(376), q(-912)}, {q(109, 2), q(-368), q(-72), q(400)},
              {q(745, 2), q(584), q(-376), q(-624)}, {q(257, 2), q(-1220), q(-232), q(1376)},
              {q(-35, 2), q(156), q(136), q(-256)},  {q(-19, 2), q(68), q(232), q(160)}};
    break;
  default:
    throw UsageError("no E-series table for rank " + std::to_string(rank));
  }
  return t;
}

std::vector<CycloNum> closed_form_reference(const AdeType &t) {
  t.validate();
  const int n = t.rank;
  std::vector<CycloNum> g;
  switch (t.family) {
  case Family::A: {
    const int h = n + 1;
    for (int i = 1; i <= n; ++i)
      g.push_back(CycloNum(h, q(n + 1)) / (CycloNum(h, q(2)) - two_cos(h, i)));
    break;
  }
  case Family::D: {
    const int h = 2 * n - 2;
    for (int i = 1; i <= n - 2; ++i)
      g.push_back((CycloNum(h, q(2)) - two_cos(h, i)) / (CycloNum(h, q(2)) + two_cos(h, i)) *
                  q(n - 1, 2));
    g.emplace_back(h, q((n - 1) * (n - 1), 2));
    g.emplace_back(h, q((n - 1) * (n - 1), 2));
    break;
  }
  case Family::E:
    g = e_series_table(n).evaluate();
    break;
  }
  return g;
}

Rational cosecant_square_sum(int n) {
  if (n < 2)
    return 0;
  CycloNum s = CycloNum::zero(n);
  for (int k = 1; k < n; ++k)
    s += CycloNum(n, q(4)) / (CycloNum(n, q(2)) - two_cos(n, k));
  return s.rational_value();
}

Rational tangent_square_sum(int rank) {
  const int h = 2 * rank - 2;
  CycloNum s = CycloNum::zero(h);
  for (int k = 1; k <= rank - 2; ++k)
    s += (CycloNum(h, q(2)) - two_cos(h, k)) / (CycloNum(h, q(2)) + two_cos(h, k));
  return s.rational_value();
}

bool DedekindCheck::ok() const {
  if (computed != closed_form || computed != general)
    return false;
  if (trig_sum.has_value() != trig_closed_form.has_value())
    return false;
  return !trig_sum || *trig_sum == *trig_closed_form;
}

DedekindCheck dedekind_check(const AdeType &t, const CoeffTable &table) {
  CycloNum s = CycloNum::zero(table.h);
  for (const auto &g : table.g_values)
    s += g;
  if (!s.is_rational())
    throw InvariantError("Σ g_i is not rational");
  const long n = t.rank;
  DedekindCheck d;
  d.computed = s.rational_value();
  d.general = rho_norm(t.rank, table.h);
  switch (t.family) {
  case Family::A:
    d.closed_form = q(n * (n + 1) * (n + 2), 12);
    d.trig_sum = q(n + 1, 4) * cosecant_square_sum(static_cast<int>(n + 1));
    d.trig_closed_form = d.closed_form;
    break;
  case Family::D:
    d.closed_form = q((n - 1) * n * (2 * n - 1), 6);
    d.trig_sum = tangent_square_sum(static_cast<int>(n));
    d.trig_closed_form = q((n - 2) * (2 * n - 3), 3);
    break;
  case Family::E:
    d.closed_form = d.general;
    break;
  }
  return d;
}

} // namespace adeh
