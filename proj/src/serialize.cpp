#include "adeh/serialize.hpp"

#include "adeh/errors.hpp"

#include <fstream>

namespace adeh {

Json to_json(const CycloNum &a) {
  Json coeffs = Json::array();
  for (const auto &c : a.coeffs())
    coeffs.push_back(format_rational(c));
  return Json{{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

CycloNum cyclo_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["order"].is_number_integer() ||
      !j["coeffs"].is_array())
    throw UsageError("CycloNum must be {\"order\": n, \"coeffs\": [\"p/q\", ...]}");
  const int order = j["order"].get<int>();
  if (order < 1)
    throw UsageError("CycloNum order must be positive");
  std::vector<Rational> coeffs;
  for (const auto &c : j["coeffs"]) {
    if (!c.is_string())
      throw UsageError("CycloNum coefficients must be \"p/q\" strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  if (static_cast<int>(coeffs.size()) != euler_phi(order))
    throw UsageError("CycloNum of order " + std::to_string(order) + " needs " +
                     std::to_string(euler_phi(order)) + " coefficients");
  return CycloNum(order, std::move(coeffs));
}

Json to_json(const Monomial &mono) {
  Json out = Json::array();
  for (const auto &[v, e] : mono) {
    Json entry = Json::array({v.m, e});
    if (v.tag != 0)
      entry.push_back(v.tag);
    out.push_back(std::move(entry));
  }
  return out;
}

Monomial monomial_from_json(const Json &j) {
  if (!j.is_array())
    throw UsageError("monomial must be an array of [m, mult] pairs");
  Monomial mono;
  for (const auto &entry : j) {
    if (!entry.is_array() || entry.size() < 2 || entry.size() > 3)
      throw UsageError("monomial entries must be [m, mult] or [m, mult, tag]");
    for (const auto &x : entry)
      if (!x.is_number_integer())
        throw UsageError("monomial entries must be integers");
    HVar v{entry[0].get<int>(), entry.size() == 3 ? entry[2].get<int>() : 0};
    const int e = entry[1].get<int>();
    if (v.m < 1 || e < 1 || v.tag < 0)
      throw UsageError("monomial entries need m >= 1, mult >= 1, tag >= 0");
    mono[v] += e;
  }
  return mono;
}

Json roots_json(const RootSystem &rs, const CoxeterData &cd) {
  auto ambient = [&](const IntVector &v) {
    Json a = Json::array();
    for (long x : rs.to_ambient(v)) {
      if (x % rs.ambient_scale == 0)
        a.push_back(x / rs.ambient_scale);
      else
        a.push_back(static_cast<double>(x) / rs.ambient_scale);
    }
    return a;
  };
  Json simple = Json::array();
  for (const auto &s : rs.simple_roots)
    simple.push_back(ambient(s));
  Json reps = Json::array();
  for (const auto &r : cd.reps)
    reps.push_back(ambient(r));
  Json orbits = Json::array();
  for (const auto &cycle : cd.orbits.cycles) {
    Json o = Json::array();
    for (std::size_t idx : cycle)
      o.push_back(ambient(rs.roots[idx]));
    orbits.push_back(std::move(o));
  }
  Json cartan = Json::array();
  for (std::size_t i = 0; i < rs.gram.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < rs.gram.cols(); ++j)
      row.push_back(rs.gram(i, j));
    cartan.push_back(std::move(row));
  }
  return Json{{"type", rs.type.name()},
              {"rank", rs.rank},
              {"h", cd.h},
              {"root_count", rs.root_count()},
              {"exponents", cd.exponents},
              {"ambient_dim", rs.ambient_dim},
              {"cartan", std::move(cartan)},
              {"simple_roots", std::move(simple)},
              {"orbit_representatives", std::move(reps)},
              {"orbits", std::move(orbits)}};
}

std::string approx_string(const CycloNum &a, int digits) { return embed_complex(a, digits).real_string(); }

Json coeffs_json(const CoeffTable &ct, int digits) {
  Json g = Json::array();
  CycloNum sum = CycloNum::zero(ct.h);
  for (std::size_t i = 0; i < ct.g_values.size(); ++i) {
    const ComplexApprox z = embed_complex(ct.g_values[i], digits);
    g.push_back(Json{{"i", i + 1},
                     {"exact", to_json(ct.g_values[i])},
                     {"approx", z.real()},
                     {"approx_digits", z.real_string()},
                     {"a", to_json(ct.a_values[i])},
                     {"ratio", to_json(ct.ratios[i])}});
    sum += ct.g_values[i];
  }
  Json out{{"type", ct.type.name()}, {"h", ct.h}, {"g", std::move(g)}};
  out["sum_g"] = sum.is_rational() ? Json(format_rational(sum.rational_value())) : to_json(sum);
  return out;
}

namespace {

Json terms_json(const DiffPoly &p) {
  Json terms = Json::array();
  for (const auto &[k, c] : p.terms())
    terms.push_back(Json{{"coeff", to_json(c)}, {"hbar_half", k.hbar_half}, {"y", to_json(k.y)}, {"d", to_json(k.d)}});
  return terms;
}

} // namespace

Json hirota_json(const HirotaSystem &sys) {
  Json vars = Json::array();
  for (const auto &v : sys.variables) {
    const QVariable q = q_variable(sys.h, v);
    Json entry{{"m", v.m}, {"exponent", q.exponent}, {"k", q.k}, {"q_factor", q.factor.get_str()}};
    if (v.tag != 0)
      entry["tag"] = v.tag;
    vars.push_back(std::move(entry));
  }
  Json counts = Json::object();
  for (const auto &[w, c] : sys.nonzero_counts())
    counts[std::to_string(w)] = c;
  Json eqs = Json::array();
  for (const auto &eq : sys.equations)
    eqs.push_back(Json{{"y_monomial", to_json(eq.y)}, {"weight", eq.weight()}, {"terms", terms_json(eq.poly)}});
  return Json{{"type", sys.type.name()},
              {"h", sys.h},
              {"max_weight", sys.max_weight},
              {"rho_rho", format_rational(sys.rho_rho)},
              {"weight0_scalar", to_json(sys.weight0_scalar)},
              {"rhs", "2h sum_m m y_m d/dy_m + <rho,rho>"},
              {"variables", std::move(vars)},
              {"nonzero_counts", std::move(counts)},
              {"operator", terms_json(sys.op)},
              {"equations", std::move(eqs)}};
}

Json residuals_json(const ResidualReport &report) {
  Json res = Json::array();
  for (const auto &r : report.residuals)
    res.push_back(Json{{"equation", to_json(r.equation)},
                       {"x_monomial", to_json(r.x)},
                       {"hbar_half", r.hbar_half},
                       {"coeff", to_json(r.coeff)}});
  return Json{{"ok", report.ok()},
              {"valid_weight", report.valid_weight},
              {"equations_checked", report.equations_checked},
              {"residuals", std::move(res)}};
}

TauSeries tau_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("truncation_weight") || !j["truncation_weight"].is_number_integer() ||
      !j.contains("coeffs") || !j["coeffs"].is_array())
    throw UsageError("tau file must be {\"truncation_weight\": T, \"coeffs\": [...]}");
  TauSeries tau;
  tau.truncation_weight = j["truncation_weight"].get<int>();
  for (const auto &entry : j["coeffs"]) {
    if (!entry.is_object() || !entry.contains("monomial") || !entry.contains("hbar_poly") ||
        !entry["hbar_poly"].is_array())
      throw UsageError("tau coefficient entries need \"monomial\" and \"hbar_poly\"");
    const Monomial mono = monomial_from_json(entry["monomial"]);
    HbarPoly &poly = tau.coeffs[mono];
    for (const auto &t : entry["hbar_poly"]) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_number_integer())
        throw UsageError("hbar_poly entries must be [\"p/q\", halfpower]");
      poly[t[1].get<int>()] += parse_rational(t[0].get<std::string>());
    }
  }
  return tau;
}

Json to_json(const TauSeries &tau) {
  Json coeffs = Json::array();
  for (const auto &[mono, poly] : tau.coeffs) {
    Json hp = Json::array();
    for (const auto &[k, c] : poly)
      hp.push_back(Json::array({format_rational(c), k}));
    coeffs.push_back(Json{{"monomial", to_json(mono)}, {"hbar_poly", std::move(hp)}});
  }
  return Json{{"truncation_weight", tau.truncation_weight}, {"coeffs", std::move(coeffs)}};
}

Json golden_json(const AdeType &t, int h, const std::vector<CycloNum> &g) {
  Json arr = Json::array();
  for (const auto &x : g)
    arr.push_back(to_json(x));
  return Json{{"type", t.name()}, {"h", h}, {"g", std::move(arr)}};
}

std::vector<CycloNum> golden_values(const Json &j, const AdeType &expected) {
  if (!j.is_object() || !j.contains("type") || !j.contains("g") || !j["g"].is_array())
    throw UsageError("golden file must be {\"type\": ..., \"h\": ..., \"g\": [...]}");
  if (j["type"] != expected.name())
    throw UsageError("golden file is for " + j["type"].dump() + ", expected " + expected.name());
  std::vector<CycloNum> g;
  for (const auto &x : j["g"])
    g.push_back(cyclo_from_json(x));
  return g;
}

std::filesystem::path golden_path(const std::filesystem::path &dir, const AdeType &t) {
  return dir / (t.name() + ".json");
}

Json read_json_file(const std::filesystem::path &p) {
  std::ifstream in(p);
  if (!in)
    throw UsageError("cannot open " + p.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw UsageError("malformed JSON in " + p.string() + ": " + e.what());
  }
}

} // namespace adeh
