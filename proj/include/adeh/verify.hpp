#pragma once

#include "adeh/hirota.hpp"
#include "adeh/oracle.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace adeh {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  /// Types to check; empty means every standard type. Fixed-type checks
  /// (A_3/D_4 bilinear form, word independence, A_1 oracle, tau evaluation)
  /// run only for the types listed.
  std::vector<AdeType> types;
  std::filesystem::path golden_dir;
  unsigned seed = 20240601;
  int random_trials = 100;
  int hirota_weight = 6;
  ExecPolicy policy = ExecPolicy::parallel;
};

/// Runs every check of criteria 1-8, in a fixed order.
std::vector<CheckResult> run_checks(const VerifyOptions &opts);

struct CriterionSummary {
  int criterion = 0;
  std::string title;
  int checks = 0;
  int failures = 0;
  bool pass() const { return checks > 0 && failures == 0; }
};

/// One line per criterion 1-9. Criterion 9 (analytic statements, out of scope)
/// passes exactly when criteria 1-8 all ran and passed.
std::vector<CriterionSummary> summarize(const std::vector<CheckResult> &results);

/// Empty when the engine's A_1 system equals the oracle term by term,
/// otherwise a description of the first difference.
std::string compare_with_oracle(const HirotaSystem &sys, const oracle::A1System &ref);

/// Φ = 1 + t^D, D a Hirota monomial of the first nonzero equation of the
/// lowest weight; the equation then has residual 2 D! c_D at x = 0.
TauSeries perturbation_of_one(const HirotaSystem &sys);

} // namespace adeh
