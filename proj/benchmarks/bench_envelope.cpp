#include <benchmark/benchmark.h>

#include "ordhull/envelope.hpp"
#include "ordhull/instance.hpp"
#include "ordhull/poset.hpp"
#include "ordhull/semigroup.hpp"
#include "ordhull/statements.hpp"
#include "ordhull/verifier.hpp"

namespace {

using namespace ordhull;

FiniteSemigroup z2(const std::string& e, const std::string& g) {
  return FiniteSemigroup::from_table({e, g}, {0, 1, 1, 0});
}

Poset diamond() {
  return Poset::from_pairs({"00", "01", "10", "11"},
                           {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
}

// Three carrier points, one fixed by the swap; the workhorse instance of the
// test suite at its natural scale.
Instance bench_instance() {
  return Instance(z2("e", "g"), {"a", "b", "c"}, {0, 1, 2, 1, 0, 2}, z2("1", "s"), {0, 1},
                  diamond(), {0, 1, 2, 3, 0, 2, 1, 3});
}

void BM_WorkspaceBuild(benchmark::State& state) {
  const Instance inst = bench_instance();
  for (auto _ : state) {
    EnvelopeWorkspace ws(inst);
    benchmark::DoNotOptimize(ws.table_count());
  }
}
BENCHMARK(BM_WorkspaceBuild);

void BM_LowerEnvelopeScan(benchmark::State& state) {
  const Instance inst = bench_instance();
  EnvelopeWorkspace ws(inst);
  const FunctionTable f{{1, 2, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(ws.lower(f, FunctionClass::HG));
}
BENCHMARK(BM_LowerEnvelopeScan);

void BM_LowerEnvelopeOrbitwise(benchmark::State& state) {
  const Instance inst = bench_instance();
  const FunctionTable f{{1, 2, 3}};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lower_envelope(inst, f, FunctionClass::HG, EnvelopeAlgorithm::Orbitwise));
}
BENCHMARK(BM_LowerEnvelopeOrbitwise);

void BM_RegularizedMinorant(benchmark::State& state) {
  const Instance inst = bench_instance();
  const FunctionTable f{{1, 2, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(regularized_minorant(inst, f));
}
BENCHMARK(BM_RegularizedMinorant);

void BM_FullSuite(benchmark::State& state) {
  const Instance inst = bench_instance();
  for (auto _ : state) {
    const SuiteResult res = run_suite(inst);
    benchmark::DoNotOptimize(res.reports.size());
  }
}
BENCHMARK(BM_FullSuite);

void BM_EnumerateSmallFamily(benchmark::State& state) {
  InstanceFamily fam;
  fam.bounds = {2, 2, 3};
  for (auto _ : state) {
    int count = 0;
    enumerate_instances(fam, [&](const Instance&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateSmallFamily);

}  // namespace

BENCHMARK_MAIN();
