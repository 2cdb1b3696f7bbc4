// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include "adeh/coefficients.hpp"
#include "adeh/hirota.hpp"
#include "adeh/parallel.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace adeh;

ExecPolicy policy_of(const benchmark::State &state) {
  return state.range(0) ? ExecPolicy::parallel : ExecPolicy::serial;
}

struct Fixture {
  RootSystem rs;
  CoxeterData cd;
  CoeffTable ct;
  explicit Fixture(const char *name)
      : rs(build_root_system(AdeType::parse(name))), cd(compute_coxeter_data(rs)), ct(coeff_table(rs, cd)) {}
};

const Fixture &fixture(const char *name) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, Fixture(name)).first;
  return it->second;
}

void BM_Projector(benchmark::State &state) {
  const Fixture &f = fixture("E8");
  for (auto _ : state)
    benchmark::DoNotOptimize(spectral_projector(f.cd.powers, 1, policy_of(state)));
}

void BM_CoeffTable(benchmark::State &state) {
  const Fixture &f = fixture("E8");
  for (auto _ : state)
    benchmark::DoNotOptimize(coeff_table(f.rs, f.cd, policy_of(state)));
}

void BM_Generate(benchmark::State &state) {
  const Fixture &f = fixture("E6");
  for (auto _ : state)
    benchmark::DoNotOptimize(generate(f.rs, f.cd, f.ct, 8, policy_of(state)));
}

void BM_Apply(benchmark::State &state) {
  const Fixture &f = fixture("A1");
  const HirotaSystem sys = generate(f.rs, f.cd, f.ct, 8);
  TauSeries tau;
  tau.truncation_weight = 14;
  tau.coeffs[Monomial{}][0] = 1;
  tau.coeffs[{{HVar{1, 0}, 1}}][-1] = 2;
  tau.coeffs[{{HVar{1, 0}, 3}}][-3] = make_rational(1, 3);
  tau.coeffs[{{HVar{3, 0}, 1}}][-1] = -1;
  for (auto _ : state)
    benchmark::DoNotOptimize(apply(sys, tau, policy_of(state)));
}

} // namespace

BENCHMARK(BM_Projector)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoeffTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Generate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Apply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
