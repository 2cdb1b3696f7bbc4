#pragma once

#include "adeh/spectral.hpp"

#include <optional>
#include <vector>

namespace adeh {

/// Vertex-operator coefficients per Coxeter orbit, indexed by the orbit
/// representatives α_1..α_N. a is constant on orbits; g_i = h³ a_{α_i}.
struct CoeffTable {
  AdeType type;
  int h = 0;
  std::vector<IntVector> reps;
  std::vector<WeylWord> words; // words[i](α_1) = α_i
  std::vector<CycloNum> ratios; // a_{α_i} / a_{α_1}
  std::vector<CycloNum> a_values;
  std::vector<CycloNum> g_values;
  std::vector<double> approx; // g_i, double precision

  /// a for any root, resolved through the orbit map.
  CycloNum a_of(const CoxeterData &cd, const RootSystem &rs, const IntVector &root) const;
};

/// a_{wα} / a_α = Π_{γ∈A+} (⟨κ,γ⟩ / ⟨κ,wγ⟩)^{⟨α,γ⟩²}. Integer exponents only,
/// so the value is exact in Q(ζ_h) with no branch choices.
CycloNum coeff_ratio(const RootSystem &rs, const CoxeterData &cd, const IntVector &alpha,
                     const WeylWord &w, ExecPolicy policy = ExecPolicy::parallel);

/// Normalised by h Σ_i a_{α_i} = N(h+1)/(12h). Throws InvariantError if a ratio
/// is not real and positive.
CoeffTable coeff_table(const RootSystem &rs, const CoxeterData &cd,
                       ExecPolicy policy = ExecPolicy::parallel);

/// g_i from the closed forms (A, D) and the E-series tables, in Q(ζ_h).
std::vector<CycloNum> closed_form_reference(const AdeType &t);

/// E-series tables as polynomials in one real generator s: E_6 uses s = √3,
/// E_7 and E_8 use s = u = cos(π/9), cos(π/15). rows[i][k] multiplies s^k.
struct GeneratorTable {
  int order = 0;
  CycloNum generator;
  std::vector<std::vector<Rational>> rows;
  std::vector<CycloNum> evaluate() const;
};
GeneratorTable e_series_table(int rank);

/// N(h+1)/(12h).
Rational consistency_constant(int rank, int h);
/// N h (h+1) / 12, which is also ⟨ρ,ρ⟩.
Rational rho_norm(int rank, int h);

struct DedekindCheck {
  Rational computed;    // Σ g_i
  Rational closed_form; // family formula, or N h (h+1)/12 for E
  Rational general;     // N h (h+1)/12
  /// A: (N+1)/4 Σ_k sin^{-2}(πk/(N+1)); D: Σ_k tan²(πk/(2N-2)) and its
  /// closed form (N-2)(2N-3)/3. Absent for E.
  std::optional<Rational> trig_sum;
  std::optional<Rational> trig_closed_form;
  bool ok() const;
};

/// Throws InvariantError if Σ g_i is not rational.
DedekindCheck dedekind_check(const AdeType &t, const CoeffTable &table);

/// Σ_{k=1}^{n-1} sin^{-2}(πk/n), evaluated in Q(ζ_n).
Rational cosecant_square_sum(int n);
/// Σ_{k=1}^{N-2} tan²(πk/(2N-2)), evaluated in Q(ζ_{2N-2}).
Rational tangent_square_sum(int rank);

/// True when a is fixed by ζ ↦ ζ^{-1} and its complex embedding is positive.
bool is_real_positive(const CycloNum &a);

} // namespace adeh
