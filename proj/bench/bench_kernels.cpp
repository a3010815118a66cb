// Serial reference vs OpenMP kernels.
//   chein_bench --benchmark_filter=Enumerate

#include <benchmark/benchmark.h>

#include "chein/classifier.hpp"
#include "chein/double_construction.hpp"
#include "chein/identity.hpp"

using namespace chein;

namespace {

const char* const kGroups[] = {"S3", "D8", "S3xC2"};

void BM_EnumerateSerial(benchmark::State& state) {
  const Group g = build_group(GroupSpec::parse(kGroups[state.range(0)]));
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_all(g, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(OpMatrix::kCount));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const Group g = build_group(GroupSpec::parse(kGroups[state.range(0)]));
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_all(g, 0));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(OpMatrix::kCount));
}

// holds trivially, so all 48^4 assignments are scanned
const Identity& four_variable_law() {
  static const Identity id = parse_identity("((x*y)*(z*w))*x^-1 = ((x*y)*(z*w))*x^-1");
  return id;
}

const CayleyTable& order48() {
  static const CayleyTable t = chein::chein(build_group(GroupSpec::symmetric(4))).table;
  return t;
}

void BM_IdentitySerial(benchmark::State& state) {
  const Identity& id = state.range(0) ? four_variable_law() : builtin(Builtin::moufang_1);
  for (auto _ : state) benchmark::DoNotOptimize(check_identity_serial(order48(), id));
}

void BM_IdentityParallel(benchmark::State& state) {
  const Identity& id = state.range(0) ? four_variable_law() : builtin(Builtin::moufang_1);
  for (auto _ : state) benchmark::DoNotOptimize(check_identity_parallel(order48(), id));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitySerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentityParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
