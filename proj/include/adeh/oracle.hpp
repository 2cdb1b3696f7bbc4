#pragma once

#include "adeh/rational.hpp"

#include <map>
#include <tuple>
#include <vector>

/// Independent reference for the A_1 hierarchy. Works in the q-presentation
/// with plain rational arithmetic: the periods 2(d/dλ)^n (2λ)^{-1/2} are
/// integrated/differentiated symbolically, both exponentials are expanded by
/// repeated multiplication, and the result is rescaled to t_m with
/// q_k = (2k+1)!! t_{2k+1}. Shares no code with the Hirota engine.
namespace adeh::oracle {

/// Exponent vector indexed by k, for the variable of weight 2k+1.
using Exps = std::vector<int>;

struct OpKey {
  Exps y;
  Exps d;
  int hbar_half = 0;
  friend bool operator<(const OpKey &a, const OpKey &b) {
    return std::tie(a.y, a.d, a.hbar_half) < std::tie(b.y, b.d, b.hbar_half);
  }
  friend bool operator==(const OpKey &, const OpKey &) = default;
};

struct A1System {
  int max_weight = 0;
  int vars = 0; // number of odd weights <= max_weight
  /// Normal-ordered operator in t-variables, in the engine's normalisation.
  std::map<OpKey, Rational> op;
  /// y-monomial -> {(d, hbar_half) -> coefficient}: Hirota-derivative form.
  std::map<Exps, std::map<std::pair<Exps, int>, Rational>> equations;
};

/// The q-form operator: Res_{λ⁰} Σ_± Γ^{±α}⊗Γ^{∓α} - 16(l + 1/8), in q-variables.
std::map<OpKey, Rational> q_operator(int max_weight);

A1System a1_system(int max_weight);

} // namespace adeh::oracle
