#pragma once

#include "adeh/cyclo.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace adeh {

/// Variable t_m / y_m of weight m. tag separates the two variables of equal
/// weight that come from the doubled exponent of D_N, N even; it is 0 otherwise.
struct HVar {
  int m = 1;
  int tag = 0;
  int weight() const { return m; }
  friend auto operator<=>(const HVar &, const HVar &) = default;
};

std::string to_string(const HVar &v);

/// Multiset of variables: variable -> multiplicity (all > 0).
using Monomial = std::map<HVar, int>;

int weight(const Monomial &mono);
int degree(const Monomial &mono);
Monomial mono_mul(const Monomial &a, const Monomial &b);
/// a - b; b must divide a.
Monomial mono_div(const Monomial &a, const Monomial &b);
bool mono_divides(const Monomial &b, const Monomial &a);
/// Π mult!
Integer mono_factorial(const Monomial &mono);
std::string to_string(const Monomial &mono, const char *symbol);

/// Every monomial in vars of weight <= max_weight (including 1), sorted.
std::vector<Monomial> monomials_up_to(const std::vector<HVar> &vars, int max_weight);

/// Index of one term: ħ^{hbar_half/2} y^y ∂^d, with all y left of all ∂.
struct TermKey {
  int hbar_half = 0;
  Monomial y;
  Monomial d;
  friend bool operator<(const TermKey &a, const TermKey &b) {
    return std::tie(a.y, a.d, a.hbar_half) < std::tie(b.y, b.d, b.hbar_half);
  }
  friend bool operator==(const TermKey &, const TermKey &) = default;
};

/// Sparse polynomial in y and ∂_y with coefficients in Q(ζ_order). Zero
/// coefficients are never stored, so equality is structural.
class DiffPoly {
public:
  explicit DiffPoly(int order = 1) : order_(order) {}
  int order() const { return order_; }
  const std::map<TermKey, CycloNum> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const TermKey &key, const CycloNum &c);
  DiffPoly &operator+=(const DiffPoly &b);
  DiffPoly &operator-=(const DiffPoly &b);
  DiffPoly &operator*=(const CycloNum &s);
  friend bool operator==(const DiffPoly &a, const DiffPoly &b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// The scalar (y- and ∂-free, ħ^0) coefficient.
  CycloNum constant() const;

private:
  int order_;
  std::map<TermKey, CycloNum> terms_;
};

} // namespace adeh
