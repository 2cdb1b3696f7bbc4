#include "adeh/spectral.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace adeh;

namespace {

struct Setup {
  RootSystem rs;
  CoxeterData cd;
  explicit Setup(const char *name, ExecPolicy policy = ExecPolicy::parallel)
      : rs(build_root_system(AdeType::parse(name))), cd(compute_coxeter_data(rs, policy)) {}
};

CycloVector to_cyclo(const IntVector &v, int order) {
  CycloVector out;
  for (long x : v)
    out.emplace_back(order, Rational(x));
  return out;
}

} // namespace

TEST_CASE("projectors resolve the identity") {
  for (const char *name : {"A2", "D4", "E6"}) {
    CAPTURE(name);
    const Setup s(name);
    const int h = s.cd.h;
    CycloMatrix sum(s.rs.rank, s.rs.rank, CycloNum::zero(h));
    for (int m = 0; m < h; ++m) {
      const CycloMatrix p = spectral_projector(s.cd.powers, m);
      for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
          sum(i, j) += p(i, j);
      CHECK(multiply(p, p) == p);
    }
    CHECK(sum == identity<CycloNum>(s.rs.rank, CycloNum::zero(h), CycloNum::one(h)));
  }
}

TEST_CASE("projector traces") {
  const Setup a2("A2");
  CHECK(projector_trace(a2.cd.powers, 0) == 0);
  CHECK(projector_trace(a2.cd.powers, 1) == 1);
  CHECK(projector_trace(a2.cd.powers, 2) == 1);

  const Setup e6("E6");
  const std::set<int> exps{1, 4, 5, 7, 8, 11};
  for (int m = 0; m < 12; ++m)
    CHECK(projector_trace(e6.cd.powers, m) == (exps.count(m) ? 1 : 0));
}

TEST_CASE("exponents") {
  CHECK(Setup("A1").cd.exponents == std::vector<int>{1});
  CHECK(Setup("D4").cd.exponents == std::vector<int>{1, 3, 3, 5});
  CHECK(Setup("E8").cd.exponents == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
  for (const auto &t : standard_types()) {
    CAPTURE(t.name());
    const Setup s(t.name().c_str());
    const int sum = std::accumulate(s.cd.exponents.begin(), s.cd.exponents.end(), 0);
    CHECK(2 * sum == s.rs.rank * s.cd.h);
    CHECK(exponents(s.cd.m, s.cd.h) == s.cd.exponents);
  }
}

TEST_CASE("kappa") {
  for (const char *name : {"A2", "D5", "E7"}) {
    CAPTURE(name);
    const Setup s(name);
    const int h = s.cd.h;
    CHECK(apply(s.cd.m, s.cd.kappa) == [&] {
      CycloVector v = s.cd.kappa;
      for (auto &x : v)
        x *= CycloNum::zeta(h);
      return v;
    }());
    for (const auto &g : s.rs.roots)
      CHECK_FALSE(s.rs.pair(s.cd.kappa, g).is_zero());
  }
  CHECK(Setup("D5").rs.root_count() == 40);

  // A_2: κ is proportional to (1, η, η²) on the sum-zero plane.
  const Setup a2("A2");
  const CycloNum eta = CycloNum::zeta(3);
  const CycloNum p1 = a2.rs.pair(a2.cd.kappa, a2.rs.simple_roots[0]);
  const CycloNum p2 = a2.rs.pair(a2.cd.kappa, a2.rs.simple_roots[1]);
  const IntVector z1 = a2.rs.to_ambient(a2.rs.simple_roots[0]);
  const IntVector z2 = a2.rs.to_ambient(a2.rs.simple_roots[1]);
  auto model = [&](const IntVector &z) {
    CycloNum v = CycloNum::zero(3);
    for (std::size_t k = 0; k < z.size(); ++k)
      v += eta.pow(static_cast<long>(k)) * Rational(z[k]);
    return v;
  };
  CHECK(p1 * model(z2) == p2 * model(z1));
}

TEST_CASE("eigen coordinates reconstruct the roots") {
  for (const char *name : {"A1", "A4", "D4", "D6", "E6", "E7"}) {
    CAPTURE(name);
    const Setup s(name);
    const int h = s.cd.h;
    for (std::size_t i = 0; i < s.cd.reps.size(); ++i) {
      CycloVector sum(s.rs.rank, CycloNum::zero(h));
      for (std::size_t a = 0; a < s.cd.eigenbasis.size(); ++a)
        for (int k = 0; k < s.rs.rank; ++k)
          sum[k] += s.cd.beta[i][a] * s.cd.eigenbasis[a].vec[k];
      CHECK(sum == to_cyclo(s.cd.reps[i], h));
    }
  }
}

TEST_CASE("normalisation") {
  const Setup a1("A1");
  CHECK(a1.cd.beta[0][0] == CycloNum(2, Rational(2)));
  CHECK(a1.cd.beta_dual[0][0] == CycloNum(2, Rational(2)));

  for (const char *name : {"A5", "D5", "E6", "E8"}) {
    CAPTURE(name);
    const Setup s(name);
    for (const auto &e : s.cd.eigenbasis) {
      const auto &p = s.cd.eigenbasis[e.partner];
      CHECK(p.exponent == s.cd.h - e.exponent);
      if (e.normalized)
        CHECK(s.rs.pair(e.vec, p.vec) == CycloNum(s.cd.h, make_rational(1, s.cd.h)));
    }
  }
}

TEST_CASE("conjugation symmetry of the eigen coordinates") {
  // conj(β_{i,a}) conj(H_a) = β_{i,p(a)} H_{p(a)} as vectors, since α_i is real.
  for (const char *name : {"A3", "D4", "D5", "E6"}) {
    CAPTURE(name);
    const Setup s(name);
    for (std::size_t i = 0; i < s.cd.reps.size(); ++i)
      for (std::size_t a = 0; a < s.cd.eigenbasis.size(); ++a) {
        const auto &e = s.cd.eigenbasis[a];
        if (e.partner == a)
          continue;
        const auto &p = s.cd.eigenbasis[e.partner];
        for (int k = 0; k < s.rs.rank; ++k)
          CHECK(s.cd.beta[i][a].conj() * e.vec[k].conj() == s.cd.beta[i][e.partner] * p.vec[k]);
      }
  }
}

TEST_CASE("Hertling sum") {
  CHECK(hertling_sum({1}, 2) == make_rational(1, 8));
  for (const auto &t : standard_types()) {
    const Setup s(t.name().c_str());
    CHECK(hertling_sum(s.cd.exponents, s.cd.h) == make_rational(s.rs.rank * (s.cd.h + 1), 12 * s.cd.h));
  }
}

TEST_CASE("serial and parallel spectral data agree") {
  for (const char *name : {"D6", "E7"}) {
    CAPTURE(name);
    const Setup par(name, ExecPolicy::parallel), ser(name, ExecPolicy::serial);
    for (int m = 0; m < par.cd.h; ++m)
      CHECK(spectral_projector(par.cd.powers, m, ExecPolicy::serial) ==
            spectral_projector(par.cd.powers, m, ExecPolicy::parallel));
    CHECK(par.cd.kappa == ser.cd.kappa);
    CHECK(par.cd.beta == ser.cd.beta);
    CHECK(par.cd.beta_dual == ser.cd.beta_dual);
  }
}
