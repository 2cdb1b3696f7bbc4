#include "adeh/root_system.hpp"

#include "adeh/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace adeh {

// ---------------------------------------------------------------------------
// AdeType

AdeType AdeType::parse(std::string_view text) {
  const std::string supported = "supported families: A<N> (N>=1), D<N> (N>=4), E6, E7, E8";
  if (text.size() < 2)
    throw UsageError("bad type '" + std::string(text) + "'; " + supported);
  AdeType t;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
  case 'A':
    t.family = Family::A;
    break;
  case 'D':
    t.family = Family::D;
    break;
  case 'E':
    t.family = Family::E;
    break;
  default:
    throw UsageError("unsupported type '" + std::string(text) + "'; " + supported);
  }
  std::string_view digits = text.substr(1);
  if (digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw UsageError("bad rank in '" + std::string(text) + "'; " + supported);
  t.rank = std::stoi(std::string(digits));
  try {
    t.validate();
  } catch (const UsageError &e) {
    throw UsageError(std::string(e.what()) + "; " + supported);
  }
  return t;
}

std::string AdeType::name() const {
  const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(rank);
}

void AdeType::validate() const {
  bool ok = false;
  switch (family) {
  case Family::A:
    ok = rank >= 1;
    break;
  case Family::D:
    ok = rank >= 4;
    break;
  case Family::E:
    ok = rank >= 6 && rank <= 8;
    break;
  }
  if (!ok)
    throw UsageError("invalid rank " + std::to_string(rank) + " for type " + name());
}

std::vector<AdeType> standard_types() {
  std::vector<AdeType> out;
  for (int n = 1; n <= 8; ++n)
    out.push_back({Family::A, n});
  for (int n = 4; n <= 8; ++n)
    out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n)
    out.push_back({Family::E, n});
  return out;
}

// ---------------------------------------------------------------------------
// Ambient models

namespace {

struct AmbientModel {
  int dim = 0;
  int scale = 1;
  std::vector<IntVector> roots;
  std::vector<IntVector> simple;
};

IntVector unit_combo(int dim, std::initializer_list<std::pair<int, long>> entries) {
  IntVector v(dim, 0);
  for (auto [i, c] : entries)
    v[i] += c;
  return v;
}

AmbientModel model_a(int n) {
  AmbientModel m;
  m.dim = n + 1;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i != j)
        m.roots.push_back(unit_combo(m.dim, {{i, 1}, {j, -1}}));
  for (int i = 1; i <= n; ++i)
    m.simple.push_back(unit_combo(m.dim, {{i - 1, 1}, {i, -1}}));
  return m;
}

AmbientModel model_d(int n) {
  AmbientModel m;
  m.dim = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (long si : {1L, -1L})
        for (long sj : {1L, -1L})
          m.roots.push_back(unit_combo(n, {{i, si}, {j, sj}}));
  for (int i = 0; i + 1 < n; ++i)
    m.simple.push_back(unit_combo(n, {{i, 1}, {i + 1, -1}}));
  m.simple.push_back(unit_combo(n, {{n - 2, 1}, {n - 1, 1}}));
  return m;
}

// Even coordinate model of E_8, doubled so that half-integers become odd integers.
// E_7 and E_6 are the sub-systems orthogonal to e_7+e_8 and additionally e_6+e_8.
AmbientModel model_e(int n) {
  AmbientModel m;
  m.dim = 8;
  m.scale = 2;
  std::vector<IntVector> all;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (long si : {2L, -2L})
        for (long sj : {2L, -2L})
          all.push_back(unit_combo(8, {{i, si}, {j, sj}}));
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0)
      continue;
    IntVector v(8);
    for (int i = 0; i < 8; ++i)
      v[i] = (mask >> i & 1) ? -1 : 1;
    all.push_back(v);
  }
  for (auto &v : all) {
    if (n <= 7 && v[6] + v[7] != 0)
      continue;
    if (n <= 6 && v[5] + v[7] != 0)
      continue;
    m.roots.push_back(v);
  }
  // α_1 = ½(e_1 + e_8) - ½(e_2 + ... + e_7), α_2 = e_1 + e_2, α_k = e_{k-1} - e_{k-2}.
  m.simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
  m.simple.push_back(unit_combo(8, {{0, 2}, {1, 2}}));
  for (int k = 3; k <= n; ++k)
    m.simple.push_back(unit_combo(8, {{k - 2, 2}, {k - 3, -2}}));
  return m;
}

long dot(const IntVector &a, const IntVector &b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

long height(const IntVector &v) { return std::accumulate(v.begin(), v.end(), 0L); }

} // namespace

// ---------------------------------------------------------------------------
// RootSystem

long RootSystem::pair(const IntVector &x, const IntVector &y) const {
  long s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0)
      continue;
    for (int j = 0; j < rank; ++j)
      s += x[i] * gram(i, j) * y[j];
  }
  return s;
}

Rational RootSystem::pair(const std::vector<Rational> &x, const std::vector<Rational> &y) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram(i, j) != 0)
        s += x[i] * gram(i, j) * y[j];
  return s;
}

CycloNum RootSystem::pair(const CycloVector &x, const IntVector &y) const {
  const int n = x.front().order();
  CycloNum s = CycloNum::zero(n);
  for (int i = 0; i < rank; ++i) {
    long gy = 0;
    for (int j = 0; j < rank; ++j)
      gy += gram(i, j) * y[j];
    if (gy != 0)
      s += x[i] * Rational(gy);
  }
  return s;
}

CycloNum RootSystem::pair(const CycloVector &x, const CycloVector &y) const {
  const int n = x.front().order();
  CycloNum s = CycloNum::zero(n);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram(i, j) != 0)
        s += x[i] * y[j] * Rational(gram(i, j));
  return s;
}

std::size_t RootSystem::index_of(const IntVector &v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    throw UsageError("vector is not a root of " + type.name());
  return it->second;
}

IntVector RootSystem::from_ambient(const IntVector &scaled) const {
  // Solve Cartan * c = (⟨v, α_j⟩)_j.
  Matrix<Rational> c(rank, rank, Rational(0));
  std::vector<Rational> rhs(rank);
  const long s2 = static_cast<long>(ambient_scale) * ambient_scale;
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j)
      c(i, j) = gram(i, j);
    rhs[i] = make_rational(dot(scaled, simple_ambient[i]), s2);
  }
  auto sol = solve(c, rhs);
  IntVector out(rank);
  for (int i = 0; i < rank; ++i) {
    if (!is_integer(sol[i]))
      throw InvariantError("ambient vector is not in the root lattice");
    out[i] = sol[i].get_num().get_si();
  }
  if (to_ambient(out) != scaled)
    throw UsageError("ambient vector does not lie in the span of the roots");
  return out;
}

IntVector RootSystem::to_ambient(const IntVector &coords) const {
  IntVector v(ambient_dim, 0);
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < ambient_dim; ++k)
      v[k] += coords[i] * simple_ambient[i][k];
  return v;
}

RootSystem build_root_system(AdeType type) {
  type.validate();
  AmbientModel model;
  switch (type.family) {
  case Family::A:
    model = model_a(type.rank);
    break;
  case Family::D:
    model = model_d(type.rank);
    break;
  case Family::E:
    model = model_e(type.rank);
    break;
  }

  RootSystem rs;
  rs.type = type;
  rs.rank = type.rank;
  rs.ambient_dim = model.dim;
  rs.ambient_scale = model.scale;
  rs.simple_ambient = model.simple;
  const long s2 = static_cast<long>(model.scale) * model.scale;
  rs.gram = IntMatrix(rs.rank, rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      long d = dot(model.simple[i], model.simple[j]);
      if (d % s2 != 0)
        throw InvariantError("non-integral Cartan entry");
      rs.gram(i, j) = d / s2;
    }

  std::vector<std::pair<IntVector, IntVector>> coord_and_ambient;
  for (const auto &amb : model.roots) {
    if (dot(amb, amb) != 2 * s2)
      throw InvariantError("root of squared length != 2");
    coord_and_ambient.emplace_back(rs.from_ambient(amb), amb);
  }
  std::vector<std::pair<IntVector, IntVector>> positive;
  for (auto &p : coord_and_ambient) {
    const auto &c = p.first;
    bool nonneg = std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](long x) { return x <= 0; });
    if (nonneg == nonpos)
      throw InvariantError("root with mixed-sign simple-root coordinates");
    if (nonneg)
      positive.push_back(p);
  }
  std::sort(positive.begin(), positive.end(), [](const auto &a, const auto &b) {
    long ha = height(a.first), hb = height(b.first);
    return ha != hb ? ha < hb : a.first < b.first;
  });
  for (const auto &p : positive) {
    rs.positive_roots.push_back(p.first);
    rs.roots.push_back(p.first);
    rs.ambient_roots.push_back(p.second);
  }
  for (const auto &p : positive) {
    IntVector neg = p.first, neg_amb = p.second;
    for (auto &x : neg)
      x = -x;
    for (auto &x : neg_amb)
      x = -x;
    rs.roots.push_back(neg);
    rs.ambient_roots.push_back(neg_amb);
  }
  if (rs.roots.size() != model.roots.size())
    throw InvariantError("positive roots do not account for half of the root set");
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    rs.index_.emplace(rs.roots[i], i);
  for (int i = 0; i < rs.rank; ++i) {
    IntVector e(rs.rank, 0);
    e[i] = 1;
    rs.simple_roots.push_back(e);
  }
  if (rs.roots.size() % rs.rank != 0)
    throw InvariantError("root count not divisible by rank");
  rs.coxeter_number = static_cast<int>(rs.roots.size() / rs.rank);
  return rs;
}

IntVector reflect(const RootSystem &rs, const IntVector &mirror, const IntVector &v) {
  if (!rs.is_root(mirror))
    throw UsageError("reflection mirror is not a root");
  const long c = rs.pair(mirror, v);
  IntVector out = v;
  for (int i = 0; i < rs.rank; ++i)
    out[i] -= c * mirror[i];
  return out;
}

IntVector simple_reflect(const RootSystem &rs, int letter, const IntVector &v) {
  if (letter < 1 || letter > rs.rank)
    throw UsageError("simple reflection index out of range");
  const int k = letter - 1;
  long c = 0;
  for (int j = 0; j < rs.rank; ++j)
    c += rs.gram(k, j) * v[j];
  IntVector out = v;
  out[k] -= c;
  return out;
}

IntVector apply_word(const RootSystem &rs, const WeylWord &w, const IntVector &v) {
  IntVector out = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = simple_reflect(rs, *it, out);
  return out;
}

WeylWord weyl_word(const RootSystem &rs, const IntVector &source, const IntVector &target,
                   SearchOrder order) {
  const std::size_t src = rs.index_of(source);
  const std::size_t dst = rs.index_of(target);
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(rs.root_count(), none);
  std::vector<int> via(rs.root_count(), 0);
  std::deque<std::size_t> queue{src};
  parent[src] = src;
  while (!queue.empty() && parent[dst] == none) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (int step = 0; step < rs.rank; ++step) {
      int letter = order == SearchOrder::ascending ? step + 1 : rs.rank - step;
      std::size_t next = rs.index_of(simple_reflect(rs, letter, rs.roots[cur]));
      if (parent[next] != none)
        continue;
      parent[next] = cur;
      via[next] = letter;
      queue.push_back(next);
    }
  }
  if (parent[dst] == none)
    throw InvariantError("Weyl group orbit search failed");
  // Path src -> dst applies letters j_1, j_2, ..., j_k in turn, so the word is
  // s_{j_k} ... s_{j_1}; walking back from dst yields exactly that order.
  WeylWord w;
  for (std::size_t cur = dst; cur != src; cur = parent[cur])
    w.letters.push_back(via[cur]);
  return w;
}

// ---------------------------------------------------------------------------
// Coxeter element

WeylWord coxeter_word(AdeType type) {
  type.validate();
  const int n = type.rank;
  WeylWord w;
  switch (type.family) {
  case Family::A:
    for (int i = n; i >= 1; --i)
      w.letters.push_back(i);
    break;
  case Family::D:
    w.letters = {n - 1, n};
    for (int i = n - 2; i >= 1; --i)
      w.letters.push_back(i);
    break;
  case Family::E:
    if (n == 6)
      w.letters = {1, 4, 6, 2, 3, 5};
    else if (n == 7)
      w.letters = {1, 4, 6, 2, 3, 5, 7};
    else
      w.letters = {1, 4, 6, 8, 2, 3, 5, 7};
    break;
  }
  return w;
}

IntMatrix coxeter_element(const RootSystem &rs) {
  const WeylWord w = coxeter_word(rs.type);
  IntMatrix m(rs.rank, rs.rank, 0);
  for (int j = 0; j < rs.rank; ++j) {
    IntVector img = apply_word(rs, w, rs.simple_roots[j]);
    for (int i = 0; i < rs.rank; ++i)
      m(i, j) = img[i];
  }
  return m;
}

Matrix<Rational> ambient_coxeter_matrix(const RootSystem &rs) {
  const int d = rs.ambient_dim;
  const Rational s2 = Rational(rs.ambient_scale * rs.ambient_scale);
  Matrix<Rational> m = identity<Rational>(d, Rational(0), Rational(1));
  for (int letter : coxeter_word(rs.type).letters) {
    const auto &a = rs.simple_ambient[letter - 1];
    Matrix<Rational> r = identity<Rational>(d, Rational(0), Rational(1));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        r(i, j) -= Rational(a[i] * a[j]) / s2;
    m = multiply<Rational>(m, r, Rational(0));
  }
  return m;
}

long matrix_order(const IntMatrix &m, long limit) {
  const std::size_t n = m.rows();
  const IntMatrix id = identity<long>(n, 0L, 1L);
  IntMatrix p = m;
  for (long k = 1; k <= limit; ++k) {
    if (p == id)
      return k;
    p = multiply(p, m);
  }
  return 0;
}

std::vector<IntVector> orbit_representatives(const RootSystem &rs) {
  const int n = rs.rank;
  std::vector<IntVector> reps;
  switch (rs.type.family) {
  case Family::A:
    for (int i = 1; i <= n; ++i)
      reps.push_back(rs.from_ambient(unit_combo(rs.ambient_dim, {{0, 1}, {i, -1}})));
    break;
  case Family::D: {
    // 1-based e_{N-1} is index n-2.
    for (int i = 1; i <= n - 2; ++i)
      reps.push_back(rs.from_ambient(unit_combo(n, {{n - 2, 1}, {i - 1, -1}})));
    reps.push_back(rs.from_ambient(unit_combo(n, {{n - 2, 1}, {n - 1, -1}})));
    reps.push_back(rs.from_ambient(unit_combo(n, {{n - 2, 1}, {n - 1, 1}})));
    break;
  }
  case Family::E:
    reps = rs.simple_roots;
    break;
  }
  return reps;
}

CoxeterOrbits coxeter_orbits(const RootSystem &rs, const IntMatrix &m) {
  const std::size_t h = static_cast<std::size_t>(rs.coxeter_number);
  CoxeterOrbits out;
  out.orbit_of.assign(rs.root_count(), -1);
  const auto reps = orbit_representatives(rs);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::size_t start = rs.index_of(reps[i]);
    if (out.orbit_of[start] != -1)
      throw InvariantError("orbit representatives " + std::to_string(out.orbit_of[start] + 1) +
                           " and " + std::to_string(i + 1) + " share an M-orbit");
    std::vector<std::size_t> cycle;
    std::size_t cur = start;
    do {
      if (out.orbit_of[cur] != -1)
        throw InvariantError("M-orbits overlap");
      out.orbit_of[cur] = static_cast<int>(i);
      cycle.push_back(cur);
      cur = rs.index_of(apply(m, rs.roots[cur]));
    } while (cur != start && cycle.size() <= h);
    if (cycle.size() != h || cur != start)
      throw InvariantError("M-orbit of size " + std::to_string(cycle.size()) + ", expected " +
                           std::to_string(h));
    out.cycles.push_back(std::move(cycle));
  }
  if (std::any_of(out.orbit_of.begin(), out.orbit_of.end(), [](int o) { return o < 0; }))
    throw InvariantError("roots outside the N representative orbits");
  return out;
}

} // namespace adeh
