#include <benchmark/benchmark.h>

#include <zerosum/bounds.hpp>
#include <zerosum/derivation.hpp>
#include <zerosum/enumeration.hpp>
#include <zerosum/minimality.hpp>
#include <zerosum/sequence.hpp>

using namespace zerosum;

static void BM_enumerate_atoms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumerateOptions opts;
  opts.jobs = 1;
  for (auto _ : state) {
    AtomSet atoms = enumerate_atoms(n, opts);
    benchmark::DoNotOptimize(atoms.atoms.size());
  }
}
BENCHMARK(BM_enumerate_atoms)->DenseRange(3, 8);

static void BM_enumerate_atoms_parallel(benchmark::State& state) {
  EnumerateOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    AtomSet atoms = enumerate_atoms(8, opts);
    benchmark::DoNotOptimize(atoms.atoms.size());
  }
}
BENCHMARK(BM_enumerate_atoms_parallel)->Arg(1)->Arg(2)->Arg(4);

static void BM_minimal_fast_minimal_input(benchmark::State& state) {
  const ZSeq s = tight_family(11, 12);  // 23 terms, no shortcut applies
  for (auto _ : state) {
    MinimalityVerdict v = is_minimal_fast(s);
    benchmark::DoNotOptimize(v.minimal);
  }
}
BENCHMARK(BM_minimal_fast_minimal_input);

static void BM_minimal_fast_with_witness(benchmark::State& state) {
  const ZSeq s = parse_seq("1^10,2^10,-3^10");
  for (auto _ : state) {
    MinimalityVerdict v = is_minimal_fast(s);
    benchmark::DoNotOptimize(v.minimal);
  }
}
BENCHMARK(BM_minimal_fast_with_witness);

static void BM_build_poset(benchmark::State& state) {
  const AtomSet atoms = enumerate_atoms(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DerivationPoset p = build_poset(atoms);
    benchmark::DoNotOptimize(p.edges.size());
  }
}
BENCHMARK(BM_build_poset)->Arg(4)->Arg(6);

static void BM_bound_report(benchmark::State& state) {
  const ZSeq s = parse_seq("4^2,3,-1^2,-9");
  for (auto _ : state) {
    BoundReport r = bound_report(s);
    benchmark::DoNotOptimize(r.main_pos);
  }
}
BENCHMARK(BM_bound_report);

static void BM_canon(benchmark::State& state) {
  const ZSeq s = parse_seq("9,1^2,-3,-4^2");
  for (auto _ : state) {
    ZSeq c = canon(s);
    benchmark::DoNotOptimize(c.length());
  }
}
BENCHMARK(BM_canon);

BENCHMARK_MAIN();
