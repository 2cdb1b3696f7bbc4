#include "adeh/errors.hpp"
#include "adeh/parallel.hpp"
#include "adeh/serialize.hpp"
#include "adeh/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef ADEH_DEFAULT_GOLDEN_DIR
#define ADEH_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace {

using namespace adeh;

enum class Format { json, table };

struct RunConfig {
  std::vector<std::string> types;
  bool all = false;
  Format format = Format::json;
  int max_weight = 6;
  int digits = 15;
  std::string out;
  std::string tau_file;
  std::string golden_dir = ADEH_DEFAULT_GOLDEN_DIR;
};

// Exit status contract: 0 success, 1 mathematical failure, 2 usage or input error.
constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

std::vector<AdeType> selected_types(const RunConfig &cfg, bool allow_many) {
  if (cfg.all) {
    if (!cfg.types.empty())
      throw UsageError("--type and --all are mutually exclusive");
    return standard_types();
  }
  if (cfg.types.empty())
    throw UsageError("--type is required (or --all)");
  if (!allow_many && cfg.types.size() > 1)
    throw UsageError("this subcommand takes a single --type");
  std::vector<AdeType> out;
  for (const auto &t : cfg.types)
    out.push_back(AdeType::parse(t));
  return out;
}

void emit(const RunConfig &cfg, const std::string &text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f)
    throw UsageError("cannot write " + cfg.out);
  f << text;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string value_string(const CycloNum &a) {
  return a.is_rational() ? a.rational_value().get_str() : a.to_string();
}

std::string join(const std::vector<int> &v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? " " : "") << v[i];
  return os.str();
}

int cmd_roots(const RunConfig &cfg) {
  Json all = Json::array();
  std::ostringstream table;
  for (const auto &t : selected_types(cfg, true)) {
    const RootSystem rs = build_root_system(t);
    const CoxeterData cd = compute_coxeter_data(rs);
    if (cfg.format == Format::json) {
      all.push_back(roots_json(rs, cd));
      continue;
    }
    const Json j = roots_json(rs, cd);
    table << t.name() << "\n"
          << "  rank        " << rs.rank << "\n"
          << "  root_count  " << rs.root_count() << "\n"
          << "  h           " << cd.h << "\n"
          << "  exponents   " << join(cd.exponents) << "\n";
    for (std::size_t i = 0; i < cd.reps.size(); ++i)
      table << "  orbit " << i + 1 << "     rep " << j["orbit_representatives"][i].dump() << ", size "
            << cd.orbits.cycles[i].size() << "\n";
  }
  if (cfg.format == Format::json)
    emit(cfg, dump(all.size() == 1 ? all[0] : all));
  else
    emit(cfg, table.str());
  return kOk;
}

int cmd_coeffs(const RunConfig &cfg) {
  Json all = Json::array();
  std::ostringstream table;
  for (const auto &t : selected_types(cfg, true)) {
    const RootSystem rs = build_root_system(t);
    const CoxeterData cd = compute_coxeter_data(rs);
    const CoeffTable ct = coeff_table(rs, cd);
    const Json j = coeffs_json(ct, cfg.digits);
    if (cfg.format == Format::json) {
      all.push_back(j);
      continue;
    }
    table << t.name() << "  (h = " << ct.h << ")\n";
    for (std::size_t i = 0; i < ct.g_values.size(); ++i)
      table << "  g_" << std::left << std::setw(3) << i + 1 << std::setw(cfg.digits + 6)
            << approx_string(ct.g_values[i], cfg.digits) << value_string(ct.g_values[i]) << "\n";
    CycloNum sum = CycloNum::zero(ct.h);
    for (const auto &g : ct.g_values)
      sum += g;
    table << "  sum g = " << value_string(sum) << "\n";
  }
  if (cfg.format == Format::json)
    emit(cfg, dump(all.size() == 1 ? all[0] : all));
  else
    emit(cfg, table.str());
  return kOk;
}

std::string count_lines(const HirotaSystem &sys) {
  std::map<int, int> total;
  for (const auto &eq : sys.equations)
    ++total[eq.weight()];
  const auto nonzero = sys.nonzero_counts();
  std::ostringstream os;
  os << sys.type.name() << " up to weight " << sys.max_weight << "\n";
  for (const auto &[w, n] : total) {
    const auto it = nonzero.find(w);
    os << "  weight " << w << ": " << n << " equations, " << (it == nonzero.end() ? 0 : it->second)
       << " nonzero\n";
  }
  if (sys.weight0_scalar.is_zero())
    os << "  weight-0 scalar identity: satisfied\n";
  else
    os << "  weight-0 scalar identity: FAILED (" << sys.weight0_scalar.to_string() << ")\n";
  return os.str();
}

HirotaSystem build_system(const AdeType &t, int max_weight) {
  const RootSystem rs = build_root_system(t);
  const CoxeterData cd = compute_coxeter_data(rs);
  const CoeffTable ct = coeff_table(rs, cd);
  return generate(rs, cd, ct, max_weight);
}

int cmd_hirota(const RunConfig &cfg) {
  const HirotaSystem sys = build_system(selected_types(cfg, false).front(), cfg.max_weight);
  const std::string counts = count_lines(sys);
  if (cfg.format == Format::table) {
    emit(cfg, counts);
  } else {
    emit(cfg, dump(hirota_json(sys)));
    // Keep stdout pure JSON.
    (cfg.out.empty() ? std::cerr : std::cout) << counts;
  }
  return sys.weight0_scalar.is_zero() ? kOk : kMathFailure;
}

int cmd_check(const RunConfig &cfg) {
  const AdeType t = selected_types(cfg, false).front();
  const TauSeries tau = tau_from_json(read_json_file(cfg.tau_file));
  if (tau.truncation_weight < cfg.max_weight)
    throw UsageError("tau series truncated at weight " + std::to_string(tau.truncation_weight) +
                     "; requires truncation ≥ " + std::to_string(cfg.max_weight));
  const HirotaSystem sys = build_system(t, cfg.max_weight);
  const ResidualReport rep = apply(sys, tau);
  if (cfg.format == Format::json) {
    emit(cfg, dump(residuals_json(rep)));
  } else {
    std::ostringstream os;
    os << t.name() << ": " << rep.equations_checked << " equations checked up to weight " << rep.valid_weight
       << ", " << rep.residuals.size() << " nonzero residuals\n";
    for (const auto &r : rep.residuals)
      os << "  equation " << to_string(r.equation, "y") << ", coefficient of " << to_string(r.x, "x")
         << " hbar^(" << r.hbar_half << "/2): " << value_string(r.coeff) << "\n";
    emit(cfg, os.str());
  }
  return rep.ok() ? kOk : kMathFailure;
}

int cmd_verify(const RunConfig &cfg) {
  VerifyOptions opts;
  if (!cfg.all)
    for (const auto &t : cfg.types)
      opts.types.push_back(AdeType::parse(t));
  opts.golden_dir = cfg.golden_dir;
  const auto results = run_checks(opts);
  bool ok = true;
  for (const auto &r : results)
    ok = ok && r.pass;
  const auto summary = summarize(results);
  if (cfg.format == Format::json) {
    Json checks = Json::array();
    for (const auto &r : results)
      checks.push_back(Json{{"criterion", r.criterion}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    Json crit = Json::array();
    for (const auto &s : summary)
      if (s.checks > 0 && (s.criterion < 9 || opts.types.empty()))
        crit.push_back(Json{{"criterion", s.criterion}, {"title", s.title}, {"pass", s.pass()}});
    emit(cfg, dump(Json{{"ok", ok}, {"checks", std::move(checks)}, {"criteria", std::move(crit)}}));
  } else {
    std::ostringstream os;
    for (const auto &r : results) {
      os << (r.pass ? "PASS  " : "FAIL  ") << r.name;
      if (!r.pass)
        os << ": " << r.detail;
      os << "\n";
    }
    for (const auto &s : summary)
      if (s.checks > 0 && (s.criterion < 9 || opts.types.empty()))
        os << "criterion " << s.criterion << ": " << (s.pass() ? "PASS" : "FAIL") << "  " << s.title << "\n";
    emit(cfg, os.str());
  }
  return ok ? kOk : kMathFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact ADE root systems, vertex-operator coefficients and Hirota equations"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"table", Format::table}};

  auto common = [&](CLI::App *sub, bool many) {
    auto *t = sub->add_option("--type", cfg.types, many ? "ADE type(s), e.g. A5, D7, E8" : "ADE type, e.g. A5");
    if (!many)
      t->expected(1);
    sub->add_option("--format", cfg.format, "json or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
  };

  auto *roots = app.add_subcommand("roots", "root system summary");
  common(roots, true);
  roots->add_flag("--all", cfg.all, "every supported type");

  auto *coeffs = app.add_subcommand("coeffs", "vertex-operator coefficients g_i");
  common(coeffs, true);
  coeffs->add_flag("--all", cfg.all, "every supported type");
  coeffs->add_option("--digits", cfg.digits, "digits for floating renditions")->check(CLI::Range(1, 50));

  auto *hirota = app.add_subcommand("hirota", "generate the Hirota equations");
  common(hirota, false);
  hirota->add_option("--max-weight", cfg.max_weight, "weight bound W")->check(CLI::NonNegativeNumber);

  auto *check = app.add_subcommand("check", "evaluate the equations on a tau series");
  common(check, false);
  check->add_option("--max-weight", cfg.max_weight, "weight bound W")->check(CLI::NonNegativeNumber);
  check->add_option("tau", cfg.tau_file, "tau series JSON file")->required();

  auto *verify = app.add_subcommand("verify", "run the acceptance checks");
  common(verify, true);
  verify->add_flag("--all", cfg.all, "every supported type (the default)");
  verify->add_option("--golden-dir", cfg.golden_dir, "directory of golden coefficient files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*roots)
      return cmd_roots(cfg);
    if (*coeffs)
      return cmd_coeffs(cfg);
    if (*hirota)
      return cmd_hirota(cfg);
    if (*check)
      return cmd_check(cfg);
    return cmd_verify(cfg);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kMathFailure;
  }
}
