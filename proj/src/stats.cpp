#include "qldd/stats.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qldd {

uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

ShotRng::ShotRng(uint64_t seed, uint64_t shot) {
  uint64_t s = seed;
  uint64_t a = splitmix64(s);
  s = shot ^ 0xD1B54A32D192ED03ull;
  uint64_t b = splitmix64(s);
  state_ = a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
}

uint64_t ShotRng::next_u64() { return splitmix64(state_); }

double ShotRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double ShotRng::next_normal() {
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

BootstrapResult bootstrap(const std::vector<double>& values, int resamples,
                          uint64_t seed) {
  if (values.empty()) {
    throw std::invalid_argument("bootstrap requires a non-empty sample");
  }
  if (resamples < 1) {
    throw std::invalid_argument("bootstrap requires resamples >= 1");
  }
  ShotRng rng(seed, 0xB007B007ull);
  const size_t n = values.size();
  std::vector<double> means;
  means.reserve(resamples);
  for (int r = 0; r < resamples; ++r) {
    double sum = 0.0;
    for (size_t j = 0; j < n; ++j) {
      sum += values[rng.next_u64() % n];
    }
    means.push_back(sum / static_cast<double>(n));
  }
  BootstrapResult result;
  for (double m : means) result.mean += m;
  result.mean /= means.size();
  double var = 0.0;
  for (double m : means) var += (m - result.mean) * (m - result.mean);
  result.std_dev = std::sqrt(var / means.size());
  return result;
}

double binomial_stderr(double p, uint64_t trials) {
  if (trials == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace qldd
