// One line per acceptance criterion; exit status 0 iff every criterion passes.
#include "adeh/verify.hpp"

#include <chrono>
#include <iostream>

int main() {
  const auto start = std::chrono::steady_clock::now();
  adeh::VerifyOptions opts;
  opts.golden_dir = ADEH_GOLDEN_DIR;
  const auto results = adeh::run_checks(opts);
  for (const auto &r : results)
    if (!r.pass)
      std::cout << "  failed check (criterion " << r.criterion << ") " << r.name << ": " << r.detail << "\n";
  bool ok = true;
  for (const auto &s : adeh::summarize(results)) {
    std::cout << "criterion " << s.criterion << ": " << (s.pass() ? "PASS" : "FAIL") << "  " << s.title << " ("
              << s.checks - s.failures << "/" << s.checks << " checks)\n";
    ok = ok && s.pass();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << results.size() << " checks in " << secs << " s\n";
  return ok ? 0 : 1;
}
