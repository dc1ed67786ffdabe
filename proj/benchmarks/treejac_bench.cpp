#include <benchmark/benchmark.h>

#include <string>

#include "treejac/fixtures.hpp"
#include "treejac/jh.hpp"
#include "treejac/stability.hpp"

namespace {

using namespace treejac;

// Path C1 - C2 - ... - Cn with alternating genus and polarization.
CurveGraph path(std::size_t n) {
  CurveDescription desc;
  for (std::size_t i = 1; i <= n; ++i)
    desc.components.push_back({"C" + std::to_string(i), static_cast<std::int64_t>(i % 2), static_cast<std::int64_t>(1 + i % 3)});
  for (std::size_t i = 1; i < n; ++i)
    desc.nodes.push_back({"P" + std::to_string(i), {"C" + std::to_string(i), "C" + std::to_string(i + 1)}});
  return validate_curve(desc);
}

void BM_CheckSemistability(benchmark::State& state) {
  const CurveGraph x = path(static_cast<std::size_t>(state.range(0)));
  const auto ctx = make_context(x, 7);
  const TorsionFreeProfile p{compute_dX(ctx, canonical_ordering(x)), NodeSet{}};
  for (auto _ : state) benchmark::DoNotOptimize(check_semistability(ctx, p));
}
BENCHMARK(BM_CheckSemistability)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_EnumerateProfiles(benchmark::State& state) {
  const CurveGraph x = path(static_cast<std::size_t>(state.range(0)));
  const auto ctx = make_context(x, 5);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_profiles(ctx, ProfileKind::Semistable));
}
BENCHMARK(BM_EnumerateProfiles)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_ComputeJhDegrees(benchmark::State& state) {
  const CurveGraph x = path(static_cast<std::size_t>(state.range(0)));
  const auto inv = global_invariants(x);
  const auto ctx = make_context(x, inv.genus + inv.h - 1);
  const auto ord = canonical_ordering(x);
  for (auto _ : state) benchmark::DoNotOptimize(compute_jh_degrees(ctx, ord));
}
BENCHMARK(BM_ComputeJhDegrees)->Arg(4)->Arg(16)->Arg(48);

void BM_ComputeDX(benchmark::State& state) {
  const CurveGraph x = fixtures::prime_tree();
  const auto ctx = make_context(x, 3);
  const auto ord = canonical_ordering(x);
  for (auto _ : state) benchmark::DoNotOptimize(compute_dX(ctx, ord));
}
BENCHMARK(BM_ComputeDX);

}  // namespace

BENCHMARK_MAIN();
