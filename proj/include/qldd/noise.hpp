#pragma once

#include <string>
#include <vector>

namespace qldd {

struct ZzCoupling {
  int a = 0;  // 1-based qubits
  int b = 0;
  double rate_rad_per_us = 0.0;
};

// Classical stand-in for always-on crosstalk and slow dephasing: static ZZ
// couplings, per-shot quasi-static Z detunings (Gaussian, mean zero), and a
// fractional over-rotation applied to every pi pulse.
struct NoiseModel {
  std::vector<ZzCoupling> zz;
  std::vector<double> sigma_z;  // per qubit, rad/us
  double pulse_over_rotation = 0.0;

  void validate(int n) const;
};

// Nearest-neighbour chain couplings at a fixed rate.
NoiseModel chain_zz_noise(const std::vector<int>& chain, double rate,
                          double sigma, int n);

// Order-of-magnitude presets: "kyiv_like" has tens-of-kHz-scale
// nearest-neighbour ZZ, "marrakesh_like" a few kHz. Config, not measurement.
NoiseModel noise_preset(const std::string& name,
                        const std::vector<int>& chain, int n);

}  // namespace qldd
