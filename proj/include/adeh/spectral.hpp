#pragma once

#include "adeh/matrix.hpp"
#include "adeh/parallel.hpp"
#include "adeh/root_system.hpp"

#include <vector>

namespace adeh {

/// One eigenvector H of the Coxeter element for the eigenvalue ζ_h^exponent.
/// tag distinguishes the two copies of the doubled exponent of D_N, N even.
struct Eigenvector {
  int exponent = 0;
  int tag = 0;
  CycloVector vec;
  /// Index (in CoxeterData::eigenbasis) of the vector paired with this one,
  /// exponent h - exponent; itself for the self-paired exponent h/2.
  std::size_t partner = 0;
  /// True when ⟨H, H_partner⟩ = 1/h holds exactly.
  bool normalized = false;
};

/// Exact spectral data of the Coxeter element over Q(ζ_h).
///
/// Normalisation of the eigenbasis: H_m = P_m e_j for the first standard basis
/// vector with nonzero image. For m < h/2 the partner is the complex conjugate
/// and H_m is rescaled so that ⟨H_m, H_{h-m}⟩ = 1/h. Self-paired vectors
/// (m = h/2) are orthogonalised against each other and rescaled by a rational
/// factor when h⟨H,H⟩ is a rational square. With this choice A_1 has β = 2.
struct CoxeterData {
  AdeType type;
  int h = 0;
  int rank = 0;
  IntMatrix m;
  std::vector<IntMatrix> powers; // M^0 .. M^{h-1}
  std::vector<int> exponents;    // sorted multiset
  CycloVector kappa;
  std::vector<CycloNum> kappa_pairings; // ⟨κ, γ⟩ per root index
  std::vector<Eigenvector> eigenbasis;  // by exponent, then tag
  std::vector<IntVector> reps;          // orbit representatives α_1..α_N
  CoxeterOrbits orbits;
  /// beta[i][a]: coordinate of α_i along eigenbasis[a].
  std::vector<CycloVector> beta;
  /// beta_dual[i][a] = h ⟨α_i, H_a⟩; equals beta[i][partner(a)] for normalised pairs.
  std::vector<CycloVector> beta_dual;
};

std::vector<IntMatrix> matrix_powers(const IntMatrix &m, int h);

/// P_m = (1/h) Σ_k ζ_h^{-mk} M^k.
CycloMatrix spectral_projector(const std::vector<IntMatrix> &powers, int m,
                               ExecPolicy policy = ExecPolicy::parallel);
CycloMatrix spectral_projector(const IntMatrix &m, int h, int exponent,
                               ExecPolicy policy = ExecPolicy::parallel);

/// trace(P_m) as an exact rational.
Rational projector_trace(const std::vector<IntMatrix> &powers, int m);

/// m in 1..h-1 repeated trace(P_m) times. Throws InvariantError if ζ_h^0 = 1
/// occurs or a trace is not a nonnegative integer.
std::vector<int> exponents(const IntMatrix &m, int h);
std::vector<int> exponents(const std::vector<IntMatrix> &powers);

/// κ = P_1 seed, falling back to standard basis vectors when the image is zero.
/// Checks M κ = ζ_h κ and ⟨κ, γ⟩ ≠ 0 for every root.
CycloVector compute_kappa(const RootSystem &rs, const std::vector<IntMatrix> &powers,
                          const IntVector &seed);

/// Solves α_i = Σ_a β_{i,a} H_a for each representative.
std::vector<CycloVector> beta_coordinates(const CoxeterData &cd, const std::vector<IntVector> &reps);

CoxeterData compute_coxeter_data(const RootSystem &rs, ExecPolicy policy = ExecPolicy::parallel);

/// Σ_a m_a (h - m_a) / (2h²); equals N(h+1)/(12h) for every ADE type.
Rational hertling_sum(const std::vector<int> &exponents, int h);

} // namespace adeh
