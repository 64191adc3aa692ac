// Serial-reference vs OpenMP-kernel comparison for the exhaustive sweeps
// and the Monte Carlo shot loop.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qldd/experiment.hpp"
#include "qldd/ldd.hpp"
#include "qldd/stabcode.hpp"

using namespace qldd;

namespace {

StabilizerCode big_code() { return trivial_code(8, 3); }

void BM_PartitionCensusSerial(benchmark::State& state) {
  StabilizerCode code = big_code();
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_census_serial(code));
  }
}
BENCHMARK(BM_PartitionCensusSerial);

void BM_PartitionCensusParallel(benchmark::State& state) {
  StabilizerCode code = big_code();
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_census(code));
  }
}
BENCHMARK(BM_PartitionCensusParallel);

void BM_DecoupledCensusSerial(benchmark::State& state) {
  StabilizerCode code = big_code();
  DecouplingGroup group = ldd_group(code, GroupVariant::Canonical);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoupled_census_serial(group, code));
  }
}
BENCHMARK(BM_DecoupledCensusSerial);

void BM_DecoupledCensusParallel(benchmark::State& state) {
  StabilizerCode code = big_code();
  DecouplingGroup group = ldd_group(code, GroupVariant::Canonical);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoupled_census(group, code));
  }
}
BENCHMARK(BM_DecoupledCensusParallel);

ExperimentSpec shot_spec() {
  ExperimentSpec spec;
  spec.chi = BellLabel::PhiPlus;
  spec.chi_prime = BellLabel::PhiMinus;
  spec.delays_us = {50.0};
  spec.sequence = named_sequence(SequenceName::RLXY4, 0.625);
  spec.shots = 4000;
  spec.seed = 96321;
  spec.noise = chain_zz_noise({1, 2, 3, 4}, 0.15, 0.02, 4);
  spec.noise.pulse_over_rotation = 0.01;
  return spec;
}

void BM_ShotsSerial(benchmark::State& state) {
  ExperimentSpec spec = shot_spec();
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment(spec));
  }
  omp_set_num_threads(saved);
}
BENCHMARK(BM_ShotsSerial)->Unit(benchmark::kMillisecond);

void BM_ShotsParallel(benchmark::State& state) {
  ExperimentSpec spec = shot_spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment(spec));
  }
}
BENCHMARK(BM_ShotsParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
