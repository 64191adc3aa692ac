#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qldd/clifford.hpp"
#include "qldd/ldd.hpp"
#include "qldd/noise.hpp"

namespace qldd {

// Dense statevector over n <= 10 qubits. Basis index bit j-1 is qubit j, so
// bitstring text (qubit 1 leftmost) lines up with Pauli string text.
struct Statevector {
  int n = 0;
  std::vector<std::complex<double>> amp;

  explicit Statevector(int n_qubits);
  double norm() const;
  double probability(uint32_t basis_index) const;
};

std::string bitstring_text(uint32_t basis_index, int n);
uint32_t parse_bitstring(const std::string& text);
int bit_parity(uint32_t basis_index);

void apply_gate(Statevector& state, const CliffordGate& gate);
void apply_circuit(Statevector& state, const CliffordCircuit& circuit);

// Rotation by `angle` about the XY-plane axis at phase_deg (0 = X, 90 = Y).
void apply_pi_axis_rotation(Statevector& state, int qubit, double phase_deg,
                            double angle);

// One sequence layer; every non-idle qubit gets a rotation by
// sign * pi * (1 + over_rotation).
void apply_pulse_layer(Statevector& state, const PulseLayer& layer,
                       double over_rotation);

// exp(-i t (sum zz_ab Z_a Z_b + sum delta_j Z_j)): a diagonal phase per
// basis state, exact and norm-preserving.
void apply_diagonal_evolution(Statevector& state,
                              const std::vector<ZzCoupling>& zz,
                              const std::vector<double>& detunings, double t);

// Overlap probability |<a|b>|^2.
double overlap_probability(const Statevector& a, const Statevector& b);

}  // namespace qldd
