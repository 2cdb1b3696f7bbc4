#pragma once

#include "adeh/matrix.hpp"
#include "adeh/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adeh {

enum class Family { A, D, E };

struct AdeType {
  Family family = Family::A;
  int rank = 1;

  /// "A5", "D7", "E8". Throws UsageError on anything else, listing the
  /// supported families.
  static AdeType parse(std::string_view text);
  std::string name() const;
  void validate() const;

  friend bool operator==(const AdeType &, const AdeType &) = default;
};

/// Every type the acceptance suite covers: A1..A8, D4..D8, E6, E7, E8.
std::vector<AdeType> standard_types();

/// Roots live in simple-root coordinates (integer vectors of length N) and are
/// paired with the Cartan matrix; the ambient model used to construct them is
/// kept alongside, scaled by ambient_scale so its coordinates are integers.
struct RootSystem {
  AdeType type;
  int rank = 0;
  int ambient_dim = 0;
  int ambient_scale = 1;
  int coxeter_number = 0;

  std::vector<IntVector> roots;          // positive roots then their negatives
  std::vector<IntVector> positive_roots; // by height, then lexicographic
  std::vector<IntVector> simple_roots;   // unit vectors, standard labelling α_1..α_N
  std::vector<IntVector> ambient_roots;  // parallel to roots
  std::vector<IntVector> simple_ambient;
  IntMatrix gram; // Cartan matrix

  std::size_t root_count() const { return roots.size(); }

  long pair(const IntVector &x, const IntVector &y) const;
  Rational pair(const std::vector<Rational> &x, const std::vector<Rational> &y) const;
  /// ⟨κ, γ⟩ for a cyclotomic vector κ and an integer vector γ.
  CycloNum pair(const CycloVector &x, const IntVector &y) const;
  CycloNum pair(const CycloVector &x, const CycloVector &y) const;

  bool is_root(const IntVector &v) const { return index_.count(v) != 0; }
  /// Index into roots; throws UsageError if v is not a root.
  std::size_t index_of(const IntVector &v) const;

  /// Simple-root coordinates of a scaled ambient vector (must lie in the root lattice span).
  IntVector from_ambient(const IntVector &scaled) const;
  IntVector to_ambient(const IntVector &coords) const;

  std::map<IntVector, std::size_t> index_;
};

RootSystem build_root_system(AdeType type);

/// v - ⟨mirror, v⟩ mirror. Throws UsageError if mirror is not a root.
IntVector reflect(const RootSystem &rs, const IntVector &mirror, const IntVector &v);
IntVector simple_reflect(const RootSystem &rs, int letter, const IntVector &v);

/// Product of simple reflections s_{l_1} s_{l_2} ... s_{l_k}; letters are 1-based.
struct WeylWord {
  std::vector<int> letters;
  friend bool operator==(const WeylWord &, const WeylWord &) = default;
};

/// Applies the word right to left: the last letter acts first.
IntVector apply_word(const RootSystem &rs, const WeylWord &w, const IntVector &v);

enum class SearchOrder { ascending, descending };

/// Breadth-first search from source over simple reflections; the first word
/// reaching target. Both roots must be in rs.
WeylWord weyl_word(const RootSystem &rs, const IntVector &source, const IntVector &target,
                   SearchOrder order = SearchOrder::ascending);

// ---------------------------------------------------------------------------
// Coxeter element and its orbits

/// Letters of the Coxeter element M = s_{w_1} ... s_{w_N}. A_N: the coordinate
/// cycle (z_0..z_N) -> (z_1..z_N,z_0); D_N: (z_1..z_N) -> (z_2..z_{N-1},-z_1,-z_N);
/// E_N: the bipartite orders σ1σ4σ6(σ8)σ2σ3σ5(σ7).
WeylWord coxeter_word(AdeType type);

/// Matrix of M in simple-root coordinates (columns are images of α_j).
IntMatrix coxeter_element(const RootSystem &rs);

/// M in the ambient model; rational because the E_8 model has half-integers.
Matrix<Rational> ambient_coxeter_matrix(const RootSystem &rs);

/// Smallest k >= 1 with M^k = 1, or 0 if none up to limit.
long matrix_order(const IntMatrix &m, long limit);

/// Orbit representatives in a fixed ordering: A: e_0 - e_i; D: e_{N-1} - e_i
/// (i <= N-2), e_{N-1} - e_N, e_{N-1} + e_N; E: the simple roots.
std::vector<IntVector> orbit_representatives(const RootSystem &rs);

struct CoxeterOrbits {
  /// cycles[i] lists root indices rep_i, M rep_i, M^2 rep_i, ...
  std::vector<std::vector<std::size_t>> cycles;
  /// orbit_of[root index] = i.
  std::vector<int> orbit_of;
};

/// Throws InvariantError unless the roots split into N orbits of size h with
/// each representative in its own orbit.
CoxeterOrbits coxeter_orbits(const RootSystem &rs, const IntMatrix &m);

} // namespace adeh
