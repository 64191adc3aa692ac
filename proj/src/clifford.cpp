#include "qldd/clifford.hpp"

#include <sstream>
#include <stdexcept>

namespace qldd {

namespace {

void check_qubit(int q, int n) {
  if (q < 1 || q > n) {
    throw std::invalid_argument("gate qubit index out of range");
  }
}

// Image of a bare X_q (want_x) or Z_q under conjugation by the gate.
PauliOperator basis_image(const CliffordGate& g, int q, bool want_x, int n) {
  auto X = [&](int qq) { return single_qubit_op(n, qq, 'X'); };
  auto Z = [&](int qq) { return single_qubit_op(n, qq, 'Z'); };
  auto Y = [&](int qq) { return single_qubit_op(n, qq, 'Y'); };
  auto neg = [](PauliOperator p) {
    p.phase_exp = (p.phase_exp + 2) & 3;
    return p;
  };
  switch (g.kind) {
    case GateKind::H:
      if (q == g.a) return want_x ? Z(q) : X(q);
      break;
    case GateKind::HY:
      if (q == g.a) return want_x ? Y(q) : neg(Z(q));
      break;
    case GateKind::X:
      if (q == g.a && !want_x) return neg(Z(q));
      break;
    case GateKind::Z:
      if (q == g.a && want_x) return neg(X(q));
      break;
    case GateKind::CNOT:
      if (q == g.a) return want_x ? multiply(X(g.a), X(g.b)) : Z(q);
      if (q == g.b) return want_x ? X(q) : multiply(Z(g.a), Z(g.b));
      break;
    case GateKind::SWAP:
      if (q == g.a) return want_x ? X(g.b) : Z(g.b);
      if (q == g.b) return want_x ? X(g.a) : Z(g.a);
      break;
  }
  return want_x ? X(q) : Z(q);
}

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::HY:
      return "HY";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::SWAP:
      return "SWAP";
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
  }
  return "?";
}

}  // namespace

CliffordGate gate_h(int q) { return {GateKind::H, q, 0}; }
CliffordGate gate_hy(int q) { return {GateKind::HY, q, 0}; }
CliffordGate gate_x(int q) { return {GateKind::X, q, 0}; }
CliffordGate gate_z(int q) { return {GateKind::Z, q, 0}; }

CliffordGate gate_cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("CNOT requires distinct qubits");
  }
  return {GateKind::CNOT, control, target};
}

CliffordGate gate_swap(int a, int b) {
  if (a == b) {
    throw std::invalid_argument("SWAP requires distinct qubits");
  }
  return {GateKind::SWAP, a, b};
}

PauliOperator conjugate(const PauliOperator& p, const CliffordGate& gate) {
  check_qubit(gate.a, p.n);
  if (gate.kind == GateKind::CNOT || gate.kind == GateKind::SWAP) {
    check_qubit(gate.b, p.n);
  }
  // G (X^x Z^z) G^dagger factors into images of the bare X_j and Z_j.
  PauliOperator r = identity_op(p.n);
  r.phase_exp = p.phase_exp;
  for (int j = 1; j <= p.n; ++j) {
    if ((p.x >> (j - 1)) & 1) r = multiply(r, basis_image(gate, j, true, p.n));
  }
  for (int j = 1; j <= p.n; ++j) {
    if ((p.z >> (j - 1)) & 1) r = multiply(r, basis_image(gate, j, false, p.n));
  }
  return r;
}

PauliOperator conjugate(const PauliOperator& p, const CliffordCircuit& c) {
  if (p.n != c.n) {
    throw std::invalid_argument("Pauli size does not match circuit");
  }
  PauliOperator r = p;
  for (const auto& g : c.gates) r = conjugate(r, g);
  return r;
}

PauliClass conjugate(const PauliClass& p, const CliffordCircuit& c) {
  PauliOperator op{p.n, p.x, p.z, 0};
  return pauli_class(conjugate(op, c));
}

CliffordCircuit invert_circuit(const CliffordCircuit& c) {
  CliffordCircuit inv;
  inv.n = c.n;
  inv.gates.assign(c.gates.rbegin(), c.gates.rend());
  return inv;
}

std::string format_circuit(const CliffordCircuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n << "\n";
  for (const auto& g : c.gates) {
    out << kind_name(g.kind) << " " << g.a;
    if (g.kind == GateKind::CNOT || g.kind == GateKind::SWAP) {
      out << " " << g.b;
    }
    out << "\n";
  }
  return out.str();
}

CliffordCircuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CliffordCircuit c;
  bool have_n = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "qubits") {
      ls >> c.n;
      have_n = true;
      continue;
    }
    if (!have_n) {
      throw std::invalid_argument("circuit file must start with 'qubits N'");
    }
    int a = 0, b = 0;
    if (word == "H" || word == "HY" || word == "X" || word == "Z") {
      if (!(ls >> a)) throw std::invalid_argument("bad gate line: " + line);
      GateKind k = word == "H"    ? GateKind::H
                   : word == "HY" ? GateKind::HY
                   : word == "X"  ? GateKind::X
                                  : GateKind::Z;
      c.gates.push_back({k, a, 0});
    } else if (word == "CNOT" || word == "SWAP") {
      if (!(ls >> a >> b)) throw std::invalid_argument("bad gate line: " + line);
      c.gates.push_back(
          {word == "CNOT" ? GateKind::CNOT : GateKind::SWAP, a, b});
    } else {
      throw std::invalid_argument("unknown gate '" + word + "'");
    }
  }
  if (!have_n) {
    throw std::invalid_argument("circuit file must declare 'qubits N'");
  }
  return c;
}

namespace {

// Working state of the synthesis: the operator list being conjugated plus
// the circuit accumulated so far.
struct Synth {
  int n;
  std::vector<PauliOperator> ops;
  CliffordCircuit circuit;

  void emit(const CliffordGate& g) {
    circuit.gates.push_back(g);
    for (auto& op : ops) op = conjugate(op, g);
  }
};

// Reduce ops[idx] to +X_a using H/HY cleanup, a SWAP if X_a is absent, a Z_a
// sign fix and CNOT fan-in. Components below `a` are guaranteed trivial.
void reduce_to_x(Synth& s, size_t idx, int a) {
  for (int q = a; q <= s.n; ++q) {
    char c = component(s.ops[idx], q);
    if (c == 'Z') s.emit(gate_h(q));
    if (c == 'Y') s.emit(gate_hy(q));
  }
  if (component(s.ops[idx], a) != 'X') {
    int j = 0;
    for (int q = a + 1; q <= s.n; ++q) {
      if (component(s.ops[idx], q) == 'X') {
        j = q;
        break;
      }
    }
    if (!j) throw std::runtime_error("synthesis invariant violated: no X");
    s.emit(gate_swap(a, j));
  }
  if (sign_of(s.ops[idx]) < 0) s.emit(gate_z(a));
  for (int q = a + 1; q <= s.n; ++q) {
    if (component(s.ops[idx], q) == 'X') s.emit(gate_cnot(a, q));
  }
}

// Reduce ops[idx] to +Z_a without disturbing an X_a fixed earlier. The
// component at `a` anticommutes with X_a, so it is Z or Y; a Y is rotated
// into Z by H-HY-H with a trailing Z_a restoring the sign of X_a.
void reduce_to_z(Synth& s, size_t idx, int a) {
  if (component(s.ops[idx], a) == 'Y') {
    s.emit(gate_h(a));
    s.emit(gate_hy(a));
    s.emit(gate_h(a));
    s.emit(gate_z(a));
  }
  for (int q = a + 1; q <= s.n; ++q) {
    char c = component(s.ops[idx], q);
    if (c == 'Y') {
      s.emit(gate_hy(q));
      s.emit(gate_h(q));
    } else if (c == 'X') {
      s.emit(gate_h(q));
    }
  }
  if (sign_of(s.ops[idx]) < 0) s.emit(gate_x(a));
  for (int q = a + 1; q <= s.n; ++q) {
    if (component(s.ops[idx], q) == 'Z') s.emit(gate_cnot(q, a));
  }
}

}  // namespace

CliffordCircuit synthesize_unencoder(const StabilizerCode& code) {
  Synth s;
  s.n = code.n;
  s.circuit.n = code.n;
  for (int m = 0; m < code.k; ++m) {
    s.ops.push_back(code.logical_x[m]);
    s.ops.push_back(code.logical_z[m]);
  }
  for (const auto& g : code.stabilizer_gens) s.ops.push_back(g);

  for (int m = 0; m < code.k; ++m) {
    int a = m + 1;
    reduce_to_x(s, 2 * m, a);
    reduce_to_z(s, 2 * m + 1, a);
  }
  for (int t = 0; t < code.n - code.k; ++t) {
    int a = code.k + t + 1;
    size_t idx = 2 * code.k + t;
    // Qubits below `a` can only carry Z components at this point; skip the
    // reduction when everything from `a` upward is already a lone Z_a.
    bool already_z = s.ops[idx].x == 0 && (s.ops[idx].z >> (a - 1)) == 1u;
    if (!already_z) {
      reduce_to_x(s, idx, a);
      s.emit(gate_h(a));
    }
    // Stabilizers processed earlier are already +Z on their own qubit, so
    // only Z components on those qubits can remain; cancel them.
    for (int q = code.k + 1; q < a; ++q) {
      if (component(s.ops[idx], q) == 'Z') s.emit(gate_cnot(q, a));
    }
    if (sign_of(s.ops[idx]) < 0) s.emit(gate_x(a));
  }
  return s.circuit;
}

std::string UnencoderReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.ok) {
      return c.label + ": expected " + c.expected + ", got " + c.actual;
    }
  }
  return "";
}

UnencoderReport verify_unencoder(const StabilizerCode& code,
                                 const CliffordCircuit& circuit) {
  if (circuit.n != code.n) {
    throw std::invalid_argument("circuit size does not match code");
  }
  UnencoderReport report;
  report.pass = true;
  auto check = [&](const std::string& label, const PauliOperator& op,
                   const PauliOperator& want) {
    PauliOperator got = conjugate(op, circuit);
    UnencoderCheck c{label, format_pauli(want), format_pauli(got),
                     got == want};
    report.pass = report.pass && c.ok;
    report.checks.push_back(std::move(c));
  };
  for (int m = 0; m < code.k; ++m) {
    check("X-bar_" + std::to_string(m + 1), code.logical_x[m],
          single_qubit_op(code.n, m + 1, 'X'));
    check("Z-bar_" + std::to_string(m + 1), code.logical_z[m],
          single_qubit_op(code.n, m + 1, 'Z'));
  }
  for (int t = 0; t < code.n - code.k; ++t) {
    check("S_" + std::to_string(t + 1), code.stabilizer_gens[t],
          single_qubit_op(code.n, code.k + t + 1, 'Z'));
  }
  return report;
}

const PauliOperator& RecoveryTable::recovery(const Syndrome& s) const {
  return by_syndrome.at(s.bits);
}

RecoveryTable derive_recovery_table(const StabilizerCode& code,
                                    const CliffordCircuit& unencoder) {
  UnencoderReport report = verify_unencoder(code, unencoder);
  if (!report.pass) {
    throw std::invalid_argument("unencoder fails verification: " +
                                report.first_failure());
  }
  if (code.n - code.k > 12) {
    throw std::invalid_argument("recovery table materialization capped at "
                                "n-k <= 12");
  }
  RecoveryTable table;
  table.n = code.n;
  table.k = code.k;
  CliffordCircuit encoder = invert_circuit(unencoder);
  uint32_t count = 1u << (code.n - code.k);
  table.by_syndrome.reserve(count);
  for (uint32_t s = 0; s < count; ++s) {
    // In the unencoded frame the recovery for syndrome s is a product of X
    // on the ancilla qubits flagged by s; pull it back to the code frame.
    PauliOperator e = identity_op(code.n);
    for (int j = 0; j < code.n - code.k; ++j) {
      if ((s >> j) & 1) {
        e = multiply(e, single_qubit_op(code.n, code.k + j + 1, 'X'));
      }
    }
    PauliOperator r = conjugate(e, encoder);
    for (int j = 0; j < code.n - code.k; ++j) {
      bool anti = !commutes(r, code.stabilizer_gens[j]);
      if (anti != static_cast<bool>((s >> j) & 1)) {
        throw std::runtime_error("recovery operator has wrong syndrome");
      }
    }
    table.by_syndrome.push_back(r);
  }
  return table;
}

StabilizerCode conjugate_code(const StabilizerCode& code,
                              const CliffordCircuit& circuit) {
  auto map = [&](const std::vector<PauliOperator>& ops) {
    std::vector<std::string> out;
    for (const auto& p : ops) out.push_back(format_pauli(conjugate(p, circuit)));
    return out;
  };
  return make_code(code.name + "-conjugated", code.n, code.k,
                   map(code.stabilizer_gens), map(code.logical_x),
                   map(code.logical_z));
}

}  // namespace qldd
