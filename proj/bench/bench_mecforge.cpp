#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "mecforge/analysis.hpp"
#include "mecforge/generator.hpp"
#include "mecforge/reference.hpp"

using namespace mecforge;

namespace {

SBox random_sbox(std::uint64_t m) {
  SBox s;
  s.table.resize(m);
  std::iota(s.table.begin(), s.table.end(), 0);
  std::mt19937_64 rng(1);
  std::shuffle(s.table.begin(), s.table.end(), rng);
  return s;
}

std::uint64_t admissible_prime_at_least(std::uint64_t n) {
  while (!(is_prime(n) && n % 3 == 2)) ++n;
  return n;
}

void BM_SboxTrialSearch(benchmark::State& state) {
  const MordellCurve c(admissible_prime_at_least(static_cast<std::uint64_t>(state.range(0))), 1);
  const auto set = CompleteSet::natural(256, c.modulus());
  for (auto _ : state) benchmark::DoNotOptimize(reference::sbox_trial_search(c, OrderingKind::Natural, set, 0));
}
BENCHMARK(BM_SboxTrialSearch)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_SboxDirect(benchmark::State& state) {
  const MordellCurve c(admissible_prime_at_least(static_cast<std::uint64_t>(state.range(0))), 1);
  const auto set = CompleteSet::natural(256, c.modulus());
  for (auto _ : state) benchmark::DoNotOptimize(sbox_direct(c, OrderingKind::Natural, set, 0));
}
BENCHMARK(BM_SboxDirect)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);

void BM_SboxIso(benchmark::State& state) {
  const PrimeModulus p(admissible_prime_at_least(static_cast<std::uint64_t>(state.range(0))));
  const MordellCurve rep(p, 1);
  const auto set = CompleteSet::natural(256, p);
  const FieldElement t_inv = mod_inverse(FieldElement(7, p));
  for (auto _ : state) benchmark::DoNotOptimize(sbox_iso(rep, t_inv, OrderingKind::Natural, set, 0));
}
BENCHMARK(BM_SboxIso)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);

void BM_WalshSerial(benchmark::State& state) {
  const SBox s = random_sbox(static_cast<std::uint64_t>(state.range(0)));
  const unsigned n = sbox_bits(s.table);
  for (auto _ : state) benchmark::DoNotOptimize(reference::max_walsh_magnitude(s.table, n));
}
BENCHMARK(BM_WalshSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_NonlinearityParallel(benchmark::State& state) {
  const SBox s = random_sbox(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nonlinearity(s));
}
BENCHMARK(BM_NonlinearityParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_DifferentialSerial(benchmark::State& state) {
  const SBox s = random_sbox(256);
  for (auto _ : state) benchmark::DoNotOptimize(reference::max_differential(s.table, 8));
}
BENCHMARK(BM_DifferentialSerial)->Unit(benchmark::kMillisecond);

void BM_DapParallel(benchmark::State& state) {
  const SBox s = random_sbox(256);
  for (auto _ : state) benchmark::DoNotOptimize(dap(s));
}
BENCHMARK(BM_DapParallel)->Unit(benchmark::kMillisecond);

void BM_BicSerial(benchmark::State& state) {
  const SBox s = random_sbox(256);
  for (auto _ : state) benchmark::DoNotOptimize(reference::bic_counts(s.table, 8));
}
BENCHMARK(BM_BicSerial)->Unit(benchmark::kMillisecond);

void BM_BicParallel(benchmark::State& state) {
  const SBox s = random_sbox(256);
  for (auto _ : state) benchmark::DoNotOptimize(bic_matrix(s));
}
BENCHMARK(BM_BicParallel)->Unit(benchmark::kMillisecond);

void BM_InterpolationSerial(benchmark::State& state) {
  const SBox s = random_sbox(256);
  for (auto _ : state) benchmark::DoNotOptimize(reference::gf256_coefficients(s.table));
}
BENCHMARK(BM_InterpolationSerial)->Unit(benchmark::kMillisecond);

void BM_InterpolationParallel(benchmark::State& state) {
  const SBox s = random_sbox(256);
  for (auto _ : state) benchmark::DoNotOptimize(gf256_interpolate(s));
}
BENCHMARK(BM_InterpolationParallel)->Unit(benchmark::kMillisecond);

void BM_PstarExhaustive(benchmark::State& state) {
  const PrimeModulus p(admissible_prime_at_least(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(reference::pstar_exhaustive(p, OrderingKind::Natural));
}
BENCHMARK(BM_PstarExhaustive)->Arg(101)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_PstarIncremental(benchmark::State& state) {
  const PrimeModulus p(admissible_prime_at_least(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(pstar(p, OrderingKind::Natural));
}
BENCHMARK(BM_PstarIncremental)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

void BM_FamilyAllParameters(benchmark::State& state) {
  const PrimeModulus p(1889);
  const auto set = CompleteSet::natural(256, p);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_family(p, OrderingKind::Natural, set, 0, all_parameters(p)));
}
BENCHMARK(BM_FamilyAllParameters)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
