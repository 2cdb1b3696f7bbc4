#include "adeh/verify.hpp"

#include "adeh/errors.hpp"
#include "adeh/serialize.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace adeh {

namespace {

struct TypeData {
  AdeType type;
  RootSystem rs;
  CoxeterData cd;
  CoeffTable ct;
  HirotaSystem sys;
};

const TypeData *find(const std::vector<TypeData> &data, const std::string &name) {
  for (const auto &d : data)
    if (d.type.name() == name)
      return &d;
  return nullptr;
}

class Recorder {
public:
  explicit Recorder(std::vector<CheckResult> &out) : out_(out) {}
  // fn returns an empty string on success, a failure description otherwise.
  void check(int criterion, const std::string &name, const std::function<std::string()> &fn) {
    CheckResult r{criterion, name, false, ""};
    try {
      r.detail = fn();
      r.pass = r.detail.empty();
    } catch (const std::exception &e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

private:
  std::vector<CheckResult> &out_;
};

std::string structure(const TypeData &d) {
  const RootSystem &rs = d.rs;
  const int n = rs.rank, h = d.cd.h;
  if (static_cast<long>(rs.root_count()) != static_cast<long>(n) * h)
    return "|A| = " + std::to_string(rs.root_count()) + " != N h";
  if (matrix_order(d.cd.m, 4L * h) != h)
    return "Coxeter element order differs from h";
  const CycloMatrix p0 = spectral_projector(d.cd.powers, 0);
  for (std::size_t i = 0; i < p0.rows(); ++i)
    for (std::size_t j = 0; j < p0.cols(); ++j)
      if (!p0(i, j).is_zero())
        return "Coxeter element has eigenvalue 1";
  const CoxeterOrbits orb = coxeter_orbits(rs, d.cd.m);
  if (static_cast<int>(orb.cycles.size()) != n)
    return "orbit count differs from N";
  for (const auto &c : orb.cycles)
    if (static_cast<int>(c.size()) != h)
      return "orbit size differs from h";
  std::vector<int> seen;
  for (const auto &r : d.cd.reps)
    seen.push_back(orb.orbit_of[rs.index_of(r)]);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    return "two representatives share an orbit";
  return "";
}

std::string bourbaki(const TypeData &d, std::mt19937 &rng, int trials) {
  const RootSystem &rs = d.rs;
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> x;
    for (int i = 0; i < rs.rank; ++i)
      x.push_back(make_rational(num(rng), den(rng)));
    Rational lhs = 0;
    for (const auto &g : rs.roots) {
      std::vector<Rational> gr(g.begin(), g.end());
      const Rational p = rs.pair(gr, x);
      lhs += p * p;
    }
    if (lhs != 2 * d.cd.h * rs.pair(x, x))
      return "trial " + std::to_string(t) + ": sum <g,x>^2 = " + format_rational(lhs);
  }
  return "";
}

std::string bilinear(const TypeData &d) {
  const RootSystem &rs = d.rs;
  for (const auto &a : rs.roots)
    for (const auto &b : rs.roots) {
      long s = 0;
      for (const auto &g : rs.roots)
        s += rs.pair(a, g) * rs.pair(b, g);
      if (s != 2L * d.cd.h * rs.pair(a, b))
        return "sum <a,g><b,g> != 2h<a,b>";
    }
  return "";
}

std::string equal_tables(const std::vector<CycloNum> &got, const std::vector<CycloNum> &want) {
  if (got.size() != want.size())
    return "length " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i] != want[i])
      return "g_" + std::to_string(i + 1) + " = " + got[i].to_string() + ", expected " + want[i].to_string();
  return "";
}

std::string homogeneous(const HirotaSystem &sys) {
  for (const auto &[k, c] : sys.op.terms()) {
    if (weight(k.y) != weight(k.d))
      return "operator term of nonzero weight";
    if (k.hbar_half != degree(k.d) - degree(k.y))
      return "operator term with wrong ħ power";
  }
  for (const auto &eq : sys.equations)
    for (const auto &[k, c] : eq.poly.terms()) {
      if (!k.y.empty() || weight(k.d) != eq.weight())
        return "equation " + to_string(eq.y, "y") + " is not weight-homogeneous";
      if (k.hbar_half != degree(k.d) - degree(eq.y))
        return "equation " + to_string(eq.y, "y") + " has a term with wrong ħ power";
    }
  return "";
}

std::string weight_zero(const HirotaSystem &sys) {
  if (!sys.weight0_scalar.is_zero())
    return "sum g_i - <rho,rho> = " + sys.weight0_scalar.to_string();
  if (!sys.op.constant().is_zero())
    return "operator constant term is nonzero";
  for (const auto &eq : sys.equations)
    if (eq.y.empty() && !eq.poly.is_zero())
      return "weight-0 equation is not identically zero";
  return "";
}

oracle::Exps to_exps(const Monomial &mono, int vars) {
  oracle::Exps e(vars, 0);
  for (const auto &[v, k] : mono) {
    if (v.tag != 0 || v.m % 2 == 0 || (v.m - 1) / 2 >= vars)
      throw InvariantError("unexpected A_1 variable " + to_string(v));
    e[(v.m - 1) / 2] = k;
  }
  return e;
}

} // namespace

std::string compare_with_oracle(const HirotaSystem &sys, const oracle::A1System &ref) {
  if (sys.type.name() != "A1" || sys.max_weight != ref.max_weight)
    return "system and oracle do not describe the same A_1 truncation";
  std::map<oracle::OpKey, Rational> op;
  for (const auto &[k, c] : sys.op.terms())
    op[oracle::OpKey{to_exps(k.y, ref.vars), to_exps(k.d, ref.vars), k.hbar_half}] = c.rational_value();
  if (op != ref.op)
    return "operator differs from the oracle (" + std::to_string(op.size()) + " vs " +
           std::to_string(ref.op.size()) + " terms)";
  std::size_t nonzero = 0;
  for (const auto &eq : sys.equations) {
    std::map<std::pair<oracle::Exps, int>, Rational> terms;
    for (const auto &[k, c] : eq.poly.terms())
      terms[{to_exps(k.d, ref.vars), k.hbar_half}] = c.rational_value();
    auto it = ref.equations.find(to_exps(eq.y, ref.vars));
    if (it == ref.equations.end())
      return "oracle lacks equation " + to_string(eq.y, "y");
    if (terms != it->second)
      return "equation " + to_string(eq.y, "y") + " differs from the oracle";
    nonzero += !terms.empty();
  }
  std::size_t ref_nonzero = 0;
  for (const auto &[y, terms] : ref.equations)
    ref_nonzero += !terms.empty();
  if (ref.equations.size() != sys.equations.size() || nonzero != ref_nonzero)
    return "equation counts differ from the oracle";
  return "";
}

TauSeries perturbation_of_one(const HirotaSystem &sys) {
  for (const auto &eq : sys.equations) {
    if (eq.poly.is_zero())
      continue;
    TauSeries tau;
    tau.truncation_weight = sys.max_weight + eq.weight();
    tau.coeffs[Monomial{}][0] = 1;
    tau.coeffs[eq.poly.terms().begin()->first.d][0] = 1;
    return tau;
  }
  throw InvariantError("no nonzero equation to perturb against");
}

std::vector<CheckResult> run_checks(const VerifyOptions &opts) {
  const std::vector<AdeType> types = opts.types.empty() ? standard_types() : opts.types;
  std::vector<CheckResult> out;
  Recorder rec(out);

  std::vector<TypeData> data;
  for (const auto &t : types) {
    rec.check(0, "build " + t.name(), [&] {
      TypeData d;
      d.type = t;
      d.rs = build_root_system(t);
      d.cd = compute_coxeter_data(d.rs, opts.policy);
      d.ct = coeff_table(d.rs, d.cd, opts.policy);
      d.sys = generate(d.rs, d.cd, d.ct, opts.hirota_weight, opts.policy);
      data.push_back(std::move(d));
      return std::string();
    });
  }

  // 1. structure
  for (const auto &d : data)
    rec.check(1, "structure " + d.type.name(), [&] { return structure(d); });

  // 2. Bourbaki identity and the bilinear form
  std::mt19937 rng(opts.seed);
  for (const auto &d : data)
    rec.check(2, "sum of squares " + d.type.name(), [&] { return bourbaki(d, rng, opts.random_trials); });
  for (const char *name : {"A3", "D4"})
    if (const TypeData *d = find(data, name))
      rec.check(2, std::string("bilinear form ") + name, [&] { return bilinear(*d); });

  // 3. exponent identity
  for (const auto &d : data)
    rec.check(3, "exponent sum " + d.type.name(), [&] {
      const Rational lhs = consistency_constant(d.rs.rank, d.cd.h);
      const Rational rhs = hertling_sum(d.cd.exponents, d.cd.h);
      return lhs == rhs ? std::string() : format_rational(lhs) + " != " + format_rational(rhs);
    });

  // 4. coefficient tables
  for (const auto &d : data)
    rec.check(4, "closed form " + d.type.name(),
              [&] { return equal_tables(d.ct.g_values, closed_form_reference(d.type)); });
  if (const TypeData *d = find(data, "D4"))
    rec.check(4, "literal D4", [&] {
      std::vector<CycloNum> want;
      for (long n : {1L, 9L, 9L, 9L})
        want.emplace_back(6, make_rational(n, 2));
      return equal_tables(d->ct.g_values, want);
    });
  if (const TypeData *d = find(data, "E6"))
    rec.check(4, "literal E6", [&] {
      const CycloNum s3 = CycloNum::zeta(12, 1) + CycloNum::zeta(12, 11);
      auto v = [&](long a, long b) { return CycloNum(12, Rational(a)) + s3 * Rational(b); };
      return equal_tables(d->ct.g_values, {v(16, 8), v(7, 4), v(16, -8), v(7, -4), v(16, -8), v(16, 8)});
    });
  if (!opts.golden_dir.empty())
    for (const auto &d : data)
      rec.check(4, "golden " + d.type.name(), [&] {
        const Json j = read_json_file(golden_path(opts.golden_dir, d.type));
        return equal_tables(d.ct.g_values, golden_values(j, d.type));
      });

  // 5. sum rules
  for (const auto &d : data)
    rec.check(5, "sum rule " + d.type.name(), [&] {
      const DedekindCheck dk = dedekind_check(d.type, d.ct);
      if (dk.ok())
        return std::string();
      std::ostringstream os;
      os << "sum " << format_rational(dk.computed) << ", closed form " << format_rational(dk.closed_form)
         << ", N h (h+1)/12 = " << format_rational(dk.general);
      if (dk.trig_sum)
        os << ", trig sum " << format_rational(*dk.trig_sum) << " vs " << format_rational(*dk.trig_closed_form);
      return os.str();
    });
  for (const auto &d : data)
    if (d.type.family == Family::E)
      rec.check(5, "table sum " + d.type.name(), [&] {
        const GeneratorTable tab = e_series_table(d.type.rank);
        std::vector<Rational> sum;
        for (const auto &row : tab.rows) {
          sum.resize(std::max(sum.size(), row.size()), Rational(0));
          for (std::size_t k = 0; k < row.size(); ++k)
            sum[k] += row[k];
        }
        if (sum.front() != rho_norm(d.type.rank, d.cd.h))
          return "constant part " + format_rational(sum.front());
        for (std::size_t k = 1; k < sum.size(); ++k)
          if (sgn(sum[k]) != 0)
            return "generator power " + std::to_string(k) + " does not cancel";
        return std::string();
      });

  // 6. invariances
  for (const auto &d : data)
    rec.check(6, "M-invariance " + d.type.name(), [&] {
      const WeylWord m = coxeter_word(d.type);
      for (std::size_t i = 0; i < d.cd.reps.size(); ++i) {
        const CycloNum r = coeff_ratio(d.rs, d.cd, d.cd.reps[i], m, opts.policy);
        if (r != CycloNum::one(d.cd.h))
          return "a_{M alpha_" + std::to_string(i + 1) + "} / a_{alpha_" + std::to_string(i + 1) +
                 "} = " + r.to_string();
      }
      return std::string();
    });
  for (const char *name : {"A3", "D4", "E6"})
    if (const TypeData *d = find(data, name))
      rec.check(6, std::string("word independence ") + name, [&] {
        // A second element with w(a) = b: first reflect in a simple root orthogonal to a.
        int compared = 0;
        for (const auto &a : d->cd.reps)
          for (const auto &b : d->cd.reps) {
            const WeylWord w1 = weyl_word(d->rs, a, b, SearchOrder::ascending);
            std::vector<WeylWord> others{weyl_word(d->rs, a, b, SearchOrder::descending)};
            for (int j = 0; j < d->rs.rank; ++j)
              if (d->rs.pair(a, d->rs.simple_roots[j]) == 0) {
                WeylWord w = w1;
                w.letters.push_back(j + 1);
                others.push_back(std::move(w));
              }
            const CycloNum r1 = coeff_ratio(d->rs, d->cd, a, w1, opts.policy);
            for (const auto &w2 : others) {
              if (apply_word(d->rs, w2, a) != b)
                return std::string("alternative word does not map the representative");
              if (coeff_ratio(d->rs, d->cd, a, w2, opts.policy) != r1)
                return std::string("ratio depends on the Weyl word");
              compared += !(w1 == w2);
            }
          }
        return compared > 0 ? std::string() : std::string("no distinct words compared");
      });

  // 7. Hirota generation
  for (const auto &d : data) {
    rec.check(7, "weight 0 " + d.type.name(), [&] { return weight_zero(d.sys); });
    rec.check(7, "homogeneity " + d.type.name(), [&] { return homogeneous(d.sys); });
  }
  if (const TypeData *d = find(data, "A1"))
    rec.check(7, "A1 oracle", [&] {
      std::string diff = compare_with_oracle(d->sys, oracle::a1_system(d->sys.max_weight));
      if (!diff.empty())
        return diff;
      for (const auto &eq : d->sys.equations)
        if (eq.weight() == 4 && !eq.poly.is_zero())
          return std::string();
      return std::string("weight-4 equation is zero");
    });

  // 8. tau evaluation
  for (const char *name : {"A1", "A2", "D4", "E6"})
    if (const TypeData *d = find(data, name))
      rec.check(8, std::string("tau = 1 ") + name, [&] {
        TauSeries one;
        one.truncation_weight = d->sys.max_weight;
        one.coeffs[Monomial{}][0] = 1;
        const ResidualReport rep = apply(d->sys, one, opts.policy);
        return rep.ok() ? std::string() : std::to_string(rep.residuals.size()) + " nonzero residuals";
      });
  if (const TypeData *d = find(data, "A1"))
    rec.check(8, "perturbed tau A1", [&] {
      const ResidualReport rep = apply(d->sys, perturbation_of_one(d->sys), opts.policy);
      return rep.ok() ? std::string("perturbation was not detected") : std::string();
    });
  return out;
}

std::vector<CriterionSummary> summarize(const std::vector<CheckResult> &results) {
  static const char *titles[] = {
      "",
      "root counts, Coxeter order h, no eigenvalue 1, N orbits of size h",
      "sum of squares identity and bilinear form identity",
      "N(h+1)/(12h) equals the exponent sum",
      "coefficient tables equal the closed forms and golden data",
      "sum rules for g_i",
      "M-invariance and Weyl-word independence of coefficient ratios",
      "weight-0 identity, homogeneity, A1 oracle agreement",
      "tau = 1 has zero residuals; perturbation detected",
      "analytic statements out of scope; covered by criteria 1-8"};
  std::vector<CriterionSummary> out;
  bool build_ok = true;
  for (const auto &r : results)
    if (r.criterion == 0 && !r.pass)
      build_ok = false;
  for (int c = 1; c <= 8; ++c) {
    CriterionSummary s{c, titles[c], 0, 0};
    for (const auto &r : results)
      if (r.criterion == c) {
        ++s.checks;
        s.failures += !r.pass;
      }
    if (!build_ok)
      ++s.failures;
    out.push_back(s);
  }
  CriterionSummary nine{9, titles[9], 1, 0};
  for (int c = 0; c < 8; ++c)
    if (!out[c].pass())
      nine.failures = 1;
  out.push_back(nine);
  return out;
}

} // namespace adeh
