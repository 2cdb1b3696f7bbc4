#pragma once

#include "adeh/coefficients.hpp"
#include "adeh/diffpoly.hpp"

#include <map>
#include <set>
#include <vector>

namespace adeh {

/// y_m for m <= max_weight with m mod h an exponent; the doubled D_even
/// exponent contributes two tagged variables per weight.
std::vector<HVar> hirota_variables(const CoxeterData &cd, int max_weight);

/// Eigenbasis index carrying v. Throws UsageError when v.m is not in E_+ or
/// the tag does not exist.
std::size_t eigen_index(const CoxeterData &cd, const HVar &v);

/// Truncated Laurent series in ζ with DiffPoly coefficients.
struct KernelSeries {
  int max_zeta = 0;
  std::map<int, DiffPoly> by_degree;
  DiffPoly at(int degree, int order) const;
};

/// Coordinates of a root along the eigenbasis (y side) and the dual
/// coefficients h⟨root, H_a⟩ (∂ side).
struct RootCoordinates {
  CycloVector beta;
  CycloVector dual;
};
RootCoordinates root_coordinates(const RootSystem &rs, const CoxeterData &cd, const IntVector &root);

/// scale · exp(Σ_v 2 beta_v ħ^{-1/2} y_v ζ^{m_v}) · exp(-Σ_v dual_v ħ^{1/2} ∂_v ζ^{-m_v} / m_v),
/// both factors truncated at |ζ-degree| <= max_zeta, y left of ∂.
/// With zeta0_only, only the ζ^0 coefficient is formed.
KernelSeries vertex_kernel(const CoxeterData &cd, const CycloNum &scale, const RootCoordinates &coords,
                           int max_zeta, bool zeta0_only = false);

/// The i-th summand of the vertex operator: scale g_i and the coordinates of α_i
/// (0-based orbit index).
KernelSeries orbit_kernel(const CoxeterData &cd, const CoeffTable &ct, std::size_t i, int max_zeta);

/// Equation attached to the y-monomial `y`: the coefficient of y^y in
/// Ω Φ(x+y)Φ(x-y) written as a polynomial in Hirota derivatives D^d (terms have
/// empty y). Every term has weight(d) = weight(y) and
/// hbar_half = degree(d) - degree(y); odd-degree D^d vanish and are dropped.
struct HirotaEquation {
  Monomial y;
  DiffPoly poly;
  int weight() const { return adeh::weight(y); }
};

struct HirotaSystem {
  AdeType type;
  int h = 0;
  int rank = 0;
  int max_weight = 0;
  std::vector<int> exponents;
  std::vector<HVar> variables;
  /// Σ_i g_i ζ^0[K_i] - (2h Σ m y_m ∂_m + ⟨ρ,ρ⟩), normal ordered.
  DiffPoly op;
  std::vector<HirotaEquation> equations; // every y-monomial of weight <= max_weight
  Rational rho_rho;
  /// Σ_i g_i - ⟨ρ,ρ⟩: the weight-0 equation.
  CycloNum weight0_scalar;

  /// Number of equations with at least one term, per weight.
  std::map<int, int> nonzero_counts() const;
};

/// The RHS operator 2h Σ m y_m ∂_m + ⟨ρ,ρ⟩ on the given variables.
DiffPoly rhs_operator(int h, const std::vector<HVar> &vars, const Rational &rho_rho);

/// Pure Hirota polynomials from a normal-ordered operator.
std::vector<HirotaEquation> equations_from_operator(const DiffPoly &op, const std::vector<HVar> &vars,
                                                    int max_weight,
                                                    ExecPolicy policy = ExecPolicy::parallel);

HirotaSystem generate(const RootSystem &rs, const CoxeterData &cd, const CoeffTable &ct, int max_weight,
                      ExecPolicy policy = ExecPolicy::parallel);

// ---------------------------------------------------------------------------
// Changes of variables

/// t_m with m = m_a + k h  <->  q_k^a = Π_{r=0}^k (m_a + r h) t_m.
struct QVariable {
  HVar t;
  int exponent = 0; // m_a
  int k = 0;
  Integer factor;
};
QVariable q_variable(int h, const HVar &t);
HVar t_variable(int h, int exponent, int tag, int k);
std::vector<QVariable> to_q_variables(const HirotaSystem &sys);

/// Period component c (hλ)^e and the calculus used by the λ-presentation.
struct PeriodTerm {
  CycloNum coeff;
  Rational e;
  PeriodTerm derivative(int h) const;
  PeriodTerm integral(int h) const;
  /// Power of ζ = (hλ)^{1/h}; throws InvariantError if not an integer.
  long zeta_power(int h) const;
};

/// Linear kernel coefficients of one variable, with ζ-powers.
struct LinearCoefficient {
  CycloNum y_coeff; // of ħ^{-1/2} y_m ζ^{y_power}
  long y_power = 0;
  CycloNum d_coeff; // of ħ^{1/2} ∂_m ζ^{d_power}
  long d_power = 0;
  friend bool operator==(const LinearCoefficient &, const LinearCoefficient &) = default;
};

/// From the λ-presentation: y side 2 I^{(-1-k)} in q_k, ∂ side -f_k = -(-1)^k I^{(k)}
/// in ∂_{q_k}, then rescaled to t_m.
LinearCoefficient presentation_coefficient(const CoxeterData &cd, std::size_t i, const HVar &v);
/// The same coefficients read off orbit_kernel (divided by g_i).
LinearCoefficient kernel_coefficient(const CoxeterData &cd, const CoeffTable &ct, std::size_t i,
                                     const HVar &v);

// ---------------------------------------------------------------------------
// Tau series evaluation

/// Laurent polynomial in ħ^{1/2}: half-power -> coefficient.
using HbarPoly = std::map<int, Rational>;

struct TauSeries {
  int truncation_weight = 0;
  std::map<Monomial, HbarPoly> coeffs; // in the t (= x) variables

  std::set<HVar> variables() const;
  /// Throws UsageError if a monomial exceeds the truncation weight or uses a
  /// variable outside E_+ for the given data.
  void validate(const CoxeterData &cd) const;
  void validate(int h, const std::vector<int> &exponents) const;
};

struct Residual {
  Monomial equation; // y-monomial of the equation
  Monomial x;        // x-monomial of the coefficient
  int hbar_half = 0;
  CycloNum coeff;
};

struct ResidualReport {
  int valid_weight = 0; // x-monomials checked up to this weight
  std::size_t equations_checked = 0;
  std::vector<Residual> residuals;
  bool ok() const { return residuals.empty(); }
};

/// Evaluates every equation on Φ(x+y)Φ(x-y) at y = 0. Throws UsageError with
/// "requires truncation ≥ W" when tau.truncation_weight < sys.max_weight.
ResidualReport apply(const HirotaSystem &sys, const TauSeries &tau,
                     ExecPolicy policy = ExecPolicy::parallel);

} // namespace adeh
