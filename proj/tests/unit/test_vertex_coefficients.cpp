#include "adeh/coefficients.hpp"
#include "adeh/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace adeh;

namespace {

struct Setup {
  RootSystem rs;
  CoxeterData cd;
  CoeffTable ct;
  explicit Setup(const char *name, ExecPolicy policy = ExecPolicy::parallel)
      : rs(build_root_system(AdeType::parse(name))), cd(compute_coxeter_data(rs, policy)),
        ct(coeff_table(rs, cd, policy)) {}
};

CycloNum sqrt3() { return CycloNum::zeta(12) + CycloNum::zeta(12, 11); }

CycloNum lin(int order, long a, long b, const CycloNum &s) { return CycloNum(order, Rational(a)) + s * Rational(b); }

} // namespace

TEST_CASE("ratio examples") {
  const Setup a1("A1");
  CHECK(coeff_ratio(a1.rs, a1.cd, a1.rs.roots[0], WeylWord{{1}}) == CycloNum::one(2));
  CHECK(a1.ct.a_values[0] == CycloNum(2, make_rational(1, 16)));
  CHECK(a1.ct.g_values[0] == CycloNum(2, make_rational(1, 2)));

  const Setup a2("A2");
  for (const auto &a : a2.cd.reps)
    for (const auto &b : a2.cd.reps)
      CHECK(coeff_ratio(a2.rs, a2.cd, a, weyl_word(a2.rs, a, b)) == CycloNum::one(3));

  const Setup e6("E6");
  const auto &r = e6.cd.reps;
  const CycloNum ratio = coeff_ratio(e6.rs, e6.cd, r[1], weyl_word(e6.rs, r[1], r[0]));
  CHECK(ratio == lin(12, 16, -8, sqrt3()));
}

TEST_CASE("known coefficient tables") {
  const Setup d4("D4");
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(d4.ct.g_values[i] == CycloNum(6, make_rational(i == 0 ? 1 : 9, 2)));

  const Setup e6("E6");
  const CycloNum s = sqrt3();
  const std::vector<CycloNum> e6_want{lin(12, 16, 8, s), lin(12, 7, 4, s),  lin(12, 16, -8, s),
                                      lin(12, 7, -4, s), lin(12, 16, -8, s), lin(12, 16, 8, s)};
  CHECK(e6.ct.g_values == e6_want);

  // A_3: 4 / (2 - i^k - i^{-k}).
  const Setup a3("A3");
  const std::vector<CycloNum> a3_want{CycloNum(4, Rational(2)), CycloNum(4, Rational(1)), CycloNum(4, Rational(2))};
  CHECK(a3.ct.g_values == a3_want);

  const Setup e7("E7");
  CHECK(e7.ct.g_values[2] == CycloNum(18, make_rational(3, 2)));

  // E_8: g_1 = 33/2 + 80u + 72u² - 16u³, u = cos(π/15).
  const Setup e8("E8");
  const CycloNum u = (CycloNum::zeta(30) + CycloNum::zeta(30, 29)) * make_rational(1, 2);
  const CycloNum g1 = CycloNum(30, make_rational(33, 2)) + u * Rational(80) + u * u * Rational(72) -
                      u * u * u * Rational(16);
  CHECK(e8.ct.g_values[0] == g1);
  const double uu = std::cos(std::numbers::pi / 15);
  CHECK(e8.ct.approx[0] == doctest::Approx(16.5 + 80 * uu + 72 * uu * uu - 16 * uu * uu * uu).epsilon(1e-12));
}

TEST_CASE("tables match the closed forms for every type") {
  for (const auto &t : standard_types()) {
    CAPTURE(t.name());
    const Setup s(t.name().c_str());
    CHECK(s.ct.g_values == closed_form_reference(t));
    for (const auto &g : s.ct.g_values)
      CHECK(is_real_positive(g));
  }
}

TEST_CASE("generator tables evaluate to the closed forms") {
  for (int rank : {6, 7, 8}) {
    CAPTURE(rank);
    const AdeType t{Family::E, rank};
    CHECK(e_series_table(rank).evaluate() == closed_form_reference(t));
  }
}

TEST_CASE("sum rules") {
  CHECK(dedekind_check(AdeType::parse("A4"), Setup("A4").ct).computed == 10);
  CHECK(dedekind_check(AdeType::parse("D5"), Setup("D5").ct).computed == 30);
  CHECK(dedekind_check(AdeType::parse("E6"), Setup("E6").ct).computed == 78);
  CHECK(dedekind_check(AdeType::parse("E7"), Setup("E7").ct).computed == make_rational(399, 2));
  CHECK(dedekind_check(AdeType::parse("E8"), Setup("E8").ct).computed == 620);
  for (const auto &t : standard_types()) {
    CAPTURE(t.name());
    const DedekindCheck dk = dedekind_check(t, Setup(t.name().c_str()).ct);
    CHECK(dk.ok());
    CHECK(dk.computed == rho_norm(t.rank, build_root_system(t).coxeter_number));
  }
}

TEST_CASE("trigonometric sums") {
  // Σ_{k=1}^{n-1} csc²(πk/n) = (n² - 1)/3.
  for (int n = 2; n <= 12; ++n)
    CHECK(cosecant_square_sum(n) == make_rational(n * n - 1, 3));
  for (int rank = 4; rank <= 8; ++rank) {
    double approx = 0;
    for (int k = 1; k <= rank - 2; ++k) {
      const double x = std::tan(std::numbers::pi * k / (2 * rank - 2));
      approx += x * x;
    }
    CHECK(to_double(tangent_square_sum(rank)) == doctest::Approx(approx).epsilon(1e-12));
    CHECK(tangent_square_sum(rank) == make_rational((rank - 2) * (2 * rank - 3), 3));
  }
}

TEST_CASE("M-invariance") {
  for (const char *name : {"A4", "D5", "E6", "E7"}) {
    CAPTURE(name);
    const Setup s(name);
    const WeylWord m = coxeter_word(s.rs.type);
    for (const auto &rep : s.cd.reps)
      CHECK(coeff_ratio(s.rs, s.cd, rep, m) == CycloNum::one(s.cd.h));
  }
}

TEST_CASE("a is constant on orbits") {
  const Setup d5("D5");
  for (std::size_t i = 0; i < d5.cd.orbits.cycles.size(); ++i)
    for (std::size_t idx : d5.cd.orbits.cycles[i])
      CHECK(d5.ct.a_of(d5.cd, d5.rs, d5.rs.roots[idx]) == d5.ct.a_values[i]);
}

TEST_CASE("serial and parallel coefficients agree") {
  for (const char *name : {"D6", "E6"}) {
    CAPTURE(name);
    const Setup par(name, ExecPolicy::parallel), ser(name, ExecPolicy::serial);
    CHECK(par.ct.g_values == ser.ct.g_values);
    CHECK(par.ct.ratios == ser.ct.ratios);
    for (const auto &a : par.cd.reps)
      for (const auto &b : par.cd.reps) {
        const WeylWord w = weyl_word(par.rs, a, b);
        CHECK(coeff_ratio(par.rs, par.cd, a, w, ExecPolicy::serial) ==
              coeff_ratio(par.rs, par.cd, a, w, ExecPolicy::parallel));
      }
  }
}
