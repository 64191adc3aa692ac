#pragma once

#include <cstdint>
#include <vector>

namespace qldd {

uint64_t splitmix64(uint64_t& state);

// Counter-based per-shot stream: deterministic for a given (seed, shot)
// regardless of how shots are partitioned across threads.
class ShotRng {
 public:
  ShotRng(uint64_t seed, uint64_t shot);

  uint64_t next_u64();
  // Uniform in [0, 1).
  double next_double();
  // Standard normal, Box-Muller, one fresh pair of uniforms per call.
  double next_normal();

 private:
  uint64_t state_;
};

struct BootstrapResult {
  double mean = 0.0;
  double std_dev = 0.0;
};

// Resamples `values` with replacement `resamples` times, taking the mean of
// each resample; reports the mean and 1-sigma spread of those means.
BootstrapResult bootstrap(const std::vector<double>& values, int resamples,
                          uint64_t seed);

double binomial_stderr(double p, uint64_t trials);

}  // namespace qldd
