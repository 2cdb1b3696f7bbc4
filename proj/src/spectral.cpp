#include "adeh/spectral.hpp"

#include "adeh/errors.hpp"

#include <algorithm>

namespace adeh {

std::vector<IntMatrix> matrix_powers(const IntMatrix &m, int h) {
  std::vector<IntMatrix> p;
  p.reserve(h);
  p.push_back(identity<long>(m.rows(), 0L, 1L));
  for (int k = 1; k < h; ++k)
    p.push_back(multiply(p.back(), m));
  if (multiply(p.back(), m) != p.front())
    throw InvariantError("matrix does not have order dividing h");
  return p;
}

CycloMatrix spectral_projector(const std::vector<IntMatrix> &powers, int m, ExecPolicy policy) {
  const int h = static_cast<int>(powers.size());
  const std::size_t n = powers.front().rows();
  const Rational inv_h = make_rational(1, h);
  CycloMatrix p(n, n, CycloNum::zero(h));
  // Accumulate integer coefficients per power of ζ first, then convert once.
  auto entry = [&](std::size_t idx) {
    const std::size_t i = idx / n, j = idx % n;
    std::vector<Rational> coeff(h, Rational(0));
    for (int k = 0; k < h; ++k) {
      long c = powers[k](i, j);
      if (c == 0)
        continue;
      int e = static_cast<int>(((-static_cast<long>(m) * k) % h + h) % h);
      coeff[e] += c;
    }
    CycloNum v = CycloNum::zero(h);
    for (int e = 0; e < h; ++e)
      if (sgn(coeff[e]) != 0)
        v += CycloNum::zeta(h, e) * coeff[e];
    p(i, j) = v * inv_h;
  };
  const long total = static_cast<long>(n * n);
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long idx = 0; idx < total; ++idx)
      entry(static_cast<std::size_t>(idx));
  } else {
    for (long idx = 0; idx < total; ++idx)
      entry(static_cast<std::size_t>(idx));
  }
  return p;
}

CycloMatrix spectral_projector(const IntMatrix &m, int h, int exponent, ExecPolicy policy) {
  return spectral_projector(matrix_powers(m, h), exponent, policy);
}

Rational projector_trace(const std::vector<IntMatrix> &powers, int m) {
  const int h = static_cast<int>(powers.size());
  CycloNum t = CycloNum::zero(h);
  for (int k = 0; k < h; ++k) {
    long tr = 0;
    for (std::size_t i = 0; i < powers[k].rows(); ++i)
      tr += powers[k](i, i);
    if (tr != 0)
      t += CycloNum::zeta(h, -static_cast<long>(m) * k) * Rational(tr);
  }
  t *= make_rational(1, h);
  if (!t.is_rational())
    throw InvariantError("projector trace is not rational");
  return t.rational_value();
}

std::vector<int> exponents(const std::vector<IntMatrix> &powers) {
  const int h = static_cast<int>(powers.size());
  if (sgn(projector_trace(powers, 0)) != 0)
    throw InvariantError("Coxeter element has eigenvalue 1");
  std::vector<int> out;
  for (int m = 1; m < h; ++m) {
    Rational t = projector_trace(powers, m);
    if (!is_integer(t) || sgn(t) < 0)
      throw InvariantError("projector trace is not a nonnegative integer");
    for (long c = t.get_num().get_si(); c > 0; --c)
      out.push_back(m);
  }
  return out;
}

std::vector<int> exponents(const IntMatrix &m, int h) { return exponents(matrix_powers(m, h)); }

namespace {

bool is_zero_vector(const CycloVector &v) {
  return std::all_of(v.begin(), v.end(), [](const CycloNum &x) { return x.is_zero(); });
}

CycloVector to_cyclo(const IntVector &v, int order) {
  CycloVector out;
  out.reserve(v.size());
  for (long x : v)
    out.emplace_back(order, Rational(x));
  return out;
}

CycloVector scaled(CycloVector v, const CycloNum &s) {
  for (auto &x : v)
    x *= s;
  return v;
}

CycloVector unit(int n, int j, int order) {
  IntVector e(n, 0);
  e[j] = 1;
  return to_cyclo(e, order);
}

} // namespace

CycloVector compute_kappa(const RootSystem &rs, const std::vector<IntMatrix> &powers,
                          const IntVector &seed) {
  const int h = static_cast<int>(powers.size());
  const CycloMatrix p1 = spectral_projector(powers, 1);
  CycloVector kappa = adeh::apply(p1, to_cyclo(seed, h));
  for (int j = 0; is_zero_vector(kappa) && j < rs.rank; ++j)
    kappa = adeh::apply(p1, unit(rs.rank, j, h));
  if (is_zero_vector(kappa))
    throw InvariantError("P_1 annihilates every standard seed");
  const CycloNum z = CycloNum::zeta(h);
  if (adeh::apply(powers.size() > 1 ? powers[1] : powers[0], kappa) != scaled(kappa, z))
    throw InvariantError("κ is not an eigenvector of M for ζ_h");
  for (const auto &g : rs.roots)
    if (rs.pair(kappa, g).is_zero())
      throw InvariantError("κ lies on a mirror");
  return kappa;
}

std::vector<CycloVector> beta_coordinates(const CoxeterData &cd, const std::vector<IntVector> &reps) {
  const std::size_t n = static_cast<std::size_t>(cd.rank);
  CycloMatrix basis(n, n, CycloNum::zero(cd.h));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      basis(i, a) = cd.eigenbasis[a].vec[i];
  std::vector<CycloVector> out;
  for (const auto &r : reps) {
    CycloVector target = to_cyclo(r, cd.h);
    CycloVector b = solve(basis, target);
    // Reconstruction is exact by construction; checked anyway.
    if (adeh::apply(basis, b) != target)
      throw InvariantError("eigenbasis reconstruction failed");
    out.push_back(std::move(b));
  }
  return out;
}

Rational hertling_sum(const std::vector<int> &exponents, int h) {
  Rational s = 0;
  for (int m : exponents)
    s += Rational(m * (h - m));
  return s / Rational(2 * h * h);
}

namespace {

std::vector<Eigenvector> build_eigenbasis(const RootSystem &rs, const CoxeterData &cd,
                                          ExecPolicy policy) {
  const int h = cd.h;
  const int n = rs.rank;
  std::vector<int> distinct = cd.exponents;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<Eigenvector> basis;
  for (int m : distinct) {
    if (2 * m > h)
      continue; // produced as a partner
    const long mult = std::count(cd.exponents.begin(), cd.exponents.end(), m);
    const CycloMatrix p = spectral_projector(cd.powers, m, policy);
    std::vector<CycloVector> found;
    for (int j = 0; j < n && static_cast<long>(found.size()) < mult; ++j) {
      CycloVector v = adeh::apply(p, unit(n, j, h));
      if (is_zero_vector(v))
        continue;
      auto trial = found;
      trial.push_back(v);
      if (rank(trial) == trial.size())
        found.push_back(std::move(v));
    }
    if (static_cast<long>(found.size()) != mult)
      throw InvariantError("eigenspace for exponent " + std::to_string(m) + " not spanned");

    if (2 * m < h) {
      if (mult != 1)
        throw InvariantError("repeated exponent away from h/2");
      CycloVector hv = found.front();
      CycloVector partner = hv;
      for (auto &x : partner)
        x = x.conj();
      const CycloNum s = rs.pair(hv, partner);
      if (s.is_zero())
        throw InvariantError("isotropic eigenvector pair");
      hv = scaled(hv, (s * Rational(h)).inverse());
      Eigenvector e{m, 0, std::move(hv), 0, true};
      Eigenvector f{h - m, 0, std::move(partner), 0, true};
      basis.push_back(std::move(e));
      basis.push_back(std::move(f));
      continue;
    }

    // Self-paired exponent h/2: real eigenvectors, orthogonalised against each other.
    for (std::size_t a = 0; a < found.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) {
        const CycloNum c = rs.pair(found[a], found[b]) / rs.pair(found[b], found[b]);
        for (int i = 0; i < n; ++i)
          found[a][i] -= c * found[b][i];
      }
    for (std::size_t a = 0; a < found.size(); ++a) {
      const CycloNum norm = rs.pair(found[a], found[a]) * Rational(h);
      bool normalized = false;
      Rational root;
      if (norm.is_rational() && rational_sqrt(1 / norm.rational_value(), root)) {
        found[a] = scaled(found[a], CycloNum(h, root));
        normalized = true;
      }
      basis.push_back(Eigenvector{m, static_cast<int>(a), std::move(found[a]), 0, normalized});
    }
  }

  std::sort(basis.begin(), basis.end(), [](const Eigenvector &x, const Eigenvector &y) {
    return x.exponent != y.exponent ? x.exponent < y.exponent : x.tag < y.tag;
  });
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const int want = 2 * basis[a].exponent == h ? basis[a].exponent : h - basis[a].exponent;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (basis[b].exponent == want && (2 * want != h || basis[b].tag == basis[a].tag))
        basis[a].partner = b;
  }
  return basis;
}

} // namespace

CoxeterData compute_coxeter_data(const RootSystem &rs, ExecPolicy policy) {
  CoxeterData cd;
  cd.type = rs.type;
  cd.h = rs.coxeter_number;
  cd.rank = rs.rank;
  cd.m = coxeter_element(rs);
  if (matrix_order(cd.m, cd.h) != cd.h)
    throw InvariantError("Coxeter element order differs from h");
  cd.powers = matrix_powers(cd.m, cd.h);
  cd.exponents = exponents(cd.powers);
  if (static_cast<int>(cd.exponents.size()) != rs.rank)
    throw InvariantError("exponent count differs from the rank");

  IntVector seed(rs.rank, 0);
  seed[0] = 1;
  cd.kappa = compute_kappa(rs, cd.powers, seed);
  cd.kappa_pairings.reserve(rs.root_count());
  for (const auto &g : rs.roots)
    cd.kappa_pairings.push_back(rs.pair(cd.kappa, g));

  cd.reps = orbit_representatives(rs);
  cd.orbits = coxeter_orbits(rs, cd.m);

  cd.eigenbasis = build_eigenbasis(rs, cd, policy);
  for (const auto &e : cd.eigenbasis) {
    const CycloVector img = adeh::apply(cd.m, e.vec);
    if (img != scaled(e.vec, CycloNum::zeta(cd.h, e.exponent)))
      throw InvariantError("eigenbasis vector has the wrong eigenvalue");
  }
  cd.beta = beta_coordinates(cd, cd.reps);
  for (const auto &r : cd.reps) {
    CycloVector dual;
    const CycloVector rc = [&] {
      CycloVector v;
      for (long x : r)
        v.emplace_back(cd.h, Rational(x));
      return v;
    }();
    for (const auto &e : cd.eigenbasis)
      dual.push_back(rs.pair(rc, e.vec) * Rational(cd.h));
    cd.beta_dual.push_back(std::move(dual));
  }
  return cd;
}

} // namespace adeh
