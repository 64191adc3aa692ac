#pragma once

#include <string>
#include <vector>

#include "qldd/pauli.hpp"
#include "qldd/stabcode.hpp"

namespace qldd {

// H swaps X and Z; HY is the (X+Y)/sqrt(2) rotation swapping X and Y.
enum class GateKind { H, HY, CNOT, SWAP, X, Z };

struct CliffordGate {
  GateKind kind;
  int a = 0;  // 1-based; control for CNOT
  int b = 0;  // target for CNOT, second qubit for SWAP, unused otherwise

  friend bool operator==(const CliffordGate&, const CliffordGate&) = default;
};

struct CliffordCircuit {
  int n = 0;
  std::vector<CliffordGate> gates;  // applied in list order

  friend bool operator==(const CliffordCircuit&,
                         const CliffordCircuit&) = default;
};

CliffordGate gate_h(int q);
CliffordGate gate_hy(int q);
CliffordGate gate_x(int q);
CliffordGate gate_z(int q);
CliffordGate gate_cnot(int control, int target);
CliffordGate gate_swap(int a, int b);

// Pushes p through the gate: returns g p g^dagger with exact phase.
PauliOperator conjugate(const PauliOperator& p, const CliffordGate& gate);

// Pushes p through the whole circuit gate by gate, in application order.
PauliOperator conjugate(const PauliOperator& p, const CliffordCircuit& c);
PauliClass conjugate(const PauliClass& p, const CliffordCircuit& c);

// All gates here are self-inverse, so the inverse is the reversed list.
CliffordCircuit invert_circuit(const CliffordCircuit& c);

// One gate per line, e.g. "CNOT 1 4" or "H 3", preceded by "qubits N".
std::string format_circuit(const CliffordCircuit& c);
CliffordCircuit parse_circuit(const std::string& text);

// Builds the circuit that conjugates the code's operators, in the order
// (X1, Z1, ..., Xk, Zk, S1, ..., S_{n-k}), to (+X_1, +Z_1, ..., +X_k, +Z_k,
// +Z_{k+1}, ..., +Z_n), signs included. Deterministic: ties in qubit choice
// always go to the smallest index.
CliffordCircuit synthesize_unencoder(const StabilizerCode& code);

struct UnencoderCheck {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct UnencoderReport {
  bool pass = false;
  std::vector<UnencoderCheck> checks;

  // First failing check, or empty string.
  std::string first_failure() const;
};

UnencoderReport verify_unencoder(const StabilizerCode& code,
                                 const CliffordCircuit& circuit);

// Syndrome-keyed recovery operators. Entry s is the pull-back through the
// unencoder of X_{k+j} for each set syndrome bit j; entry 0 is the identity.
struct RecoveryTable {
  int n = 0;
  int k = 0;
  std::vector<PauliOperator> by_syndrome;  // size 2^(n-k), indexed by bits

  const PauliOperator& recovery(const Syndrome& s) const;
};

// Requires verify_unencoder(code, unencoder) to pass; throws otherwise.
RecoveryTable derive_recovery_table(const StabilizerCode& code,
                                    const CliffordCircuit& unencoder);

// Conjugates every generator of the code by the circuit, yielding an
// equivalent code expressed in the rotated frame.
StabilizerCode conjugate_code(const StabilizerCode& code,
                              const CliffordCircuit& circuit);

}  // namespace qldd
