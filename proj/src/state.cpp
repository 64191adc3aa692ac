#include "qldd/state.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qldd {

Statevector::Statevector(int n_qubits) : n(n_qubits) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("statevector supports 1..10 qubits");
  }
  amp.assign(size_t{1} << n, {0.0, 0.0});
  amp[0] = 1.0;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

double Statevector::probability(uint32_t basis_index) const {
  return std::norm(amp.at(basis_index));
}

std::string bitstring_text(uint32_t basis_index, int n) {
  std::string out(n, '0');
  for (int j = 0; j < n; ++j) {
    if ((basis_index >> j) & 1) out[j] = '1';
  }
  return out;
}

uint32_t parse_bitstring(const std::string& text) {
  uint32_t bits = 0;
  for (size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1') {
      bits |= 1u << j;
    } else if (text[j] != '0') {
      throw std::invalid_argument("bad bitstring '" + text + "'");
    }
  }
  return bits;
}

int bit_parity(uint32_t v) { return std::popcount(v) & 1; }

namespace {

void apply_1q(Statevector& state, int qubit,
              const std::complex<double> m[2][2]) {
  const uint32_t bit = 1u << (qubit - 1);
  const uint32_t dim = 1u << state.n;
  for (uint32_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    std::complex<double> a0 = state.amp[i];
    std::complex<double> a1 = state.amp[i | bit];
    state.amp[i] = m[0][0] * a0 + m[0][1] * a1;
    state.amp[i | bit] = m[1][0] * a0 + m[1][1] * a1;
  }
}

}  // namespace

void apply_gate(Statevector& state, const CliffordGate& gate) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (gate.kind) {
    case GateKind::H: {
      const std::complex<double> m[2][2] = {{inv_sqrt2, inv_sqrt2},
                                            {inv_sqrt2, -inv_sqrt2}};
      apply_1q(state, gate.a, m);
      return;
    }
    case GateKind::HY: {
      // (X + Y)/sqrt(2) as a matrix.
      const std::complex<double> m[2][2] = {
          {0.0, std::complex<double>(inv_sqrt2, -inv_sqrt2)},
          {std::complex<double>(inv_sqrt2, inv_sqrt2), 0.0}};
      apply_1q(state, gate.a, m);
      return;
    }
    case GateKind::X: {
      const std::complex<double> m[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
      apply_1q(state, gate.a, m);
      return;
    }
    case GateKind::Z: {
      const std::complex<double> m[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
      apply_1q(state, gate.a, m);
      return;
    }
    case GateKind::CNOT: {
      const uint32_t cbit = 1u << (gate.a - 1);
      const uint32_t tbit = 1u << (gate.b - 1);
      const uint32_t dim = 1u << state.n;
      for (uint32_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) {
          std::swap(state.amp[i], state.amp[i | tbit]);
        }
      }
      return;
    }
    case GateKind::SWAP: {
      const uint32_t abit = 1u << (gate.a - 1);
      const uint32_t bbit = 1u << (gate.b - 1);
      const uint32_t dim = 1u << state.n;
      for (uint32_t i = 0; i < dim; ++i) {
        if ((i & abit) && !(i & bbit)) {
          std::swap(state.amp[i], state.amp[(i & ~abit) | bbit]);
        }
      }
      return;
    }
  }
  throw std::invalid_argument("unknown gate");
}

void apply_circuit(Statevector& state, const CliffordCircuit& circuit) {
  if (circuit.n != state.n) {
    throw std::invalid_argument("circuit size does not match state");
  }
  for (const auto& g : circuit.gates) apply_gate(state, g);
}

void apply_pi_axis_rotation(Statevector& state, int qubit, double phase_deg,
                            double angle) {
  const double phi = phase_deg * std::numbers::pi / 180.0;
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  // exp(-i (angle/2) (cos phi X + sin phi Y))
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> off = std::exp(-i * phi);
  const std::complex<double> m[2][2] = {{c, -i * s * off},
                                        {-i * s * std::conj(off), c}};
  apply_1q(state, qubit, m);
}

void apply_pulse_layer(Statevector& state, const PulseLayer& layer,
                       double over_rotation) {
  if (static_cast<int>(layer.actions.size()) != state.n) {
    throw std::invalid_argument("layer size does not match state");
  }
  const double angle = std::numbers::pi * (1.0 + over_rotation);
  for (int q = 1; q <= state.n; ++q) {
    const PulseAction& a = layer.actions[q - 1];
    if (a.idle) continue;
    apply_pi_axis_rotation(state, q, a.phase_deg, a.sign * angle);
  }
}

void apply_diagonal_evolution(Statevector& state,
                              const std::vector<ZzCoupling>& zz,
                              const std::vector<double>& detunings, double t) {
  if (t == 0.0) return;
  const uint32_t dim = 1u << state.n;
  const std::complex<double> i(0.0, 1.0);
  for (uint32_t b = 0; b < dim; ++b) {
    double energy = 0.0;
    for (const auto& c : zz) {
      int za = ((b >> (c.a - 1)) & 1) ? -1 : 1;
      int zb = ((b >> (c.b - 1)) & 1) ? -1 : 1;
      energy += c.rate_rad_per_us * za * zb;
    }
    for (size_t q = 0; q < detunings.size(); ++q) {
      energy += detunings[q] * (((b >> q) & 1) ? -1 : 1);
    }
    state.amp[b] *= std::exp(-i * (energy * t));
  }
}

double overlap_probability(const Statevector& a, const Statevector& b) {
  if (a.n != b.n) throw std::invalid_argument("state size mismatch");
  std::complex<double> dot(0.0, 0.0);
  for (size_t j = 0; j < a.amp.size(); ++j) {
    dot += std::conj(a.amp[j]) * b.amp[j];
  }
  return std::norm(dot);
}

}  // namespace qldd
