#include "adeh/errors.hpp"
#include "adeh/root_system.hpp"

#include <doctest.h>

#include <set>

using namespace adeh;

namespace {

IntVector neg(IntVector v) {
  for (auto &x : v)
    x = -x;
  return v;
}

} // namespace

TEST_CASE("type parsing") {
  CHECK(AdeType::parse("A5").name() == "A5");
  CHECK(AdeType::parse("E8").family == Family::E);
  CHECK(AdeType::parse("D7").rank == 7);
  for (const char *bad : {"B3", "D3", "E9", "A0", "", "A", "e6x"})
    CHECK_THROWS_AS(AdeType::parse(bad), UsageError);
  try {
    AdeType::parse("B3");
  } catch (const UsageError &e) {
    const std::string msg = e.what();
    CHECK(msg.find("A<N>") != std::string::npos);
    CHECK(msg.find("D<N>") != std::string::npos);
    CHECK(msg.find("E8") != std::string::npos);
  }
  CHECK(standard_types().size() == 16);
}

TEST_CASE("root counts and Coxeter numbers") {
  struct Case {
    const char *type;
    std::size_t roots;
    int h;
  };
  for (const Case c : {Case{"A1", 2, 2}, Case{"A2", 6, 3}, Case{"A8", 72, 9}, Case{"D4", 24, 6},
                       Case{"D8", 112, 14}, Case{"E6", 72, 12}, Case{"E7", 126, 18}, Case{"E8", 240, 30}}) {
    CAPTURE(c.type);
    const RootSystem rs = build_root_system(AdeType::parse(c.type));
    CHECK(rs.root_count() == c.roots);
    CHECK(rs.coxeter_number == c.h);
    CHECK(rs.positive_roots.size() == c.roots / 2);
    for (const auto &r : rs.roots) {
      CHECK(rs.pair(r, r) == 2);
      CHECK(rs.is_root(neg(r)));
    }
  }
}

TEST_CASE("ambient model agrees with the Cartan pairing") {
  for (const char *name : {"A3", "D5", "E6", "E8"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(AdeType::parse(name));
    const long s2 = static_cast<long>(rs.ambient_scale) * rs.ambient_scale;
    for (std::size_t i = 0; i < rs.roots.size(); i += 7)
      for (std::size_t j = 0; j < rs.roots.size(); j += 5) {
        const IntVector a = rs.to_ambient(rs.roots[i]), b = rs.to_ambient(rs.roots[j]);
        long dot = 0;
        for (std::size_t k = 0; k < a.size(); ++k)
          dot += a[k] * b[k];
        CHECK(dot == s2 * rs.pair(rs.roots[i], rs.roots[j]));
      }
    for (const auto &r : rs.roots)
      CHECK(rs.from_ambient(rs.to_ambient(r)) == r);
  }
}

TEST_CASE("reflections") {
  const RootSystem rs = build_root_system(AdeType::parse("D4"));
  for (const auto &a : rs.roots) {
    CHECK(reflect(rs, a, a) == neg(a));
    for (const auto &v : rs.roots) {
      if (rs.pair(a, v) == 0)
        CHECK(reflect(rs, a, v) == v);
      CHECK(reflect(rs, a, reflect(rs, a, v)) == v);
      CHECK(rs.is_root(reflect(rs, a, v)));
    }
  }
  CHECK_THROWS_AS(reflect(rs, IntVector{2, 0, 0, 0}, rs.roots[0]), UsageError);
}

TEST_CASE("Coxeter element") {
  const RootSystem a2 = build_root_system(AdeType::parse("A2"));
  CHECK(matrix_order(coxeter_element(a2), 100) == 3);

  // On ambient coordinates the A_2 element is the cyclic shift of (z_0, z_1, z_2).
  const Matrix<Rational> amb = ambient_coxeter_matrix(a2);
  int ones = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK((amb(i, j) == 0 || amb(i, j) == 1));
      ones += amb(i, j) == 1;
    }
  CHECK(ones == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(amb(i, i) == 0);

  for (const char *name : {"E6", "E7", "E8", "D5"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(AdeType::parse(name));
    CHECK(matrix_order(coxeter_element(rs), 1000) == rs.coxeter_number);
  }
}

TEST_CASE("Coxeter orbits") {
  struct Case {
    const char *type;
    std::size_t orbits, size;
  };
  for (const Case c : {Case{"A1", 1, 2}, Case{"D4", 4, 6}, Case{"E8", 8, 30}, Case{"A5", 5, 6}}) {
    CAPTURE(c.type);
    const RootSystem rs = build_root_system(AdeType::parse(c.type));
    const CoxeterOrbits orb = coxeter_orbits(rs, coxeter_element(rs));
    CHECK(orb.cycles.size() == c.orbits);
    std::set<std::size_t> seen;
    for (const auto &cycle : orb.cycles) {
      CHECK(cycle.size() == c.size);
      seen.insert(cycle.begin(), cycle.end());
    }
    CHECK(seen.size() == rs.root_count());
    const auto reps = orbit_representatives(rs);
    for (std::size_t i = 0; i < reps.size(); ++i)
      CHECK(orb.orbit_of[rs.index_of(reps[i])] == static_cast<int>(i));
  }
}

TEST_CASE("representatives follow the fixed ordering") {
  const RootSystem d4 = build_root_system(AdeType::parse("D4"));
  const auto reps = orbit_representatives(d4);
  // e_3 - e_1, e_3 - e_2, e_3 - e_4, e_3 + e_4 in the ambient model.
  const std::vector<IntVector> want{{-1, 0, 1, 0}, {0, -1, 1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
  REQUIRE(reps.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(d4.to_ambient(reps[i]) == want[i]);

  const RootSystem e6 = build_root_system(AdeType::parse("E6"));
  CHECK(orbit_representatives(e6) == e6.simple_roots);
}

TEST_CASE("Weyl words") {
  const RootSystem a1 = build_root_system(AdeType::parse("A1"));
  CHECK(weyl_word(a1, a1.roots[0], a1.roots[0]).letters.empty());
  CHECK(weyl_word(a1, a1.roots[0], a1.roots[1]).letters == std::vector<int>{1});

  const RootSystem a2 = build_root_system(AdeType::parse("A2"));
  int pairs = 0;
  for (const auto &s : a2.roots)
    for (const auto &t : a2.roots)
      for (SearchOrder o : {SearchOrder::ascending, SearchOrder::descending}) {
        CHECK(apply_word(a2, weyl_word(a2, s, t, o), s) == t);
        pairs += o == SearchOrder::ascending;
      }
  CHECK(pairs == 36);
  CHECK_THROWS_AS(weyl_word(a2, IntVector{2, 0}, a2.roots[0]), UsageError);
}
