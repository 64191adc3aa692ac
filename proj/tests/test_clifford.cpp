#include <doctest.h>

#include <random>

#include "qldd/clifford.hpp"
#include "support/dense_oracle.hpp"

using namespace qldd;
namespace dt = qldd::testing;

namespace {

// Dense reference for conjugation: U p U^dagger with U the circuit unitary.
double conjugation_error(const PauliOperator& p, const CliffordCircuit& c) {
  dt::Matrix u = dt::circuit_matrix(c);
  dt::Matrix want = u * dt::dense(p) * u.adjoint();
  return (dt::dense(conjugate(p, c)) - want).norm();
}

CliffordCircuit single(int n, const CliffordGate& g) {
  return CliffordCircuit{n, {g}};
}

CliffordCircuit random_circuit(std::mt19937_64& rng, int n, int len) {
  CliffordCircuit c;
  c.n = n;
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> qubit(1, n);
  for (int i = 0; i < len; ++i) {
    int q = qubit(rng);
    int r = qubit(rng);
    while (r == q) r = qubit(rng);
    switch (kind(rng)) {
      case 0:
        c.gates.push_back(gate_h(q));
        break;
      case 1:
        c.gates.push_back(gate_hy(q));
        break;
      case 2:
        c.gates.push_back(gate_x(q));
        break;
      case 3:
        c.gates.push_back(gate_z(q));
        break;
      case 4:
        c.gates.push_back(gate_cnot(q, r));
        break;
      default:
        c.gates.push_back(gate_swap(q, r));
        break;
    }
  }
  return c;
}

PauliOperator random_pauli(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<uint32_t> bits(0, (1u << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return PauliOperator{n, bits(rng), bits(rng), phase(rng)};
}

std::vector<std::string> gate_lines(const CliffordCircuit& c) {
  std::vector<std::string> out;
  std::istringstream in(format_circuit(c));
  std::string line;
  std::getline(in, line);  // qubits header
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("single-gate conjugation identities") {
  CHECK(format_pauli(conjugate(parse_pauli("XX"), single(2, gate_cnot(1, 2)))) ==
        "+XI");
  CHECK(format_pauli(conjugate(parse_pauli("ZZ"), single(2, gate_cnot(1, 2)))) ==
        "+IZ");
  CHECK(format_pauli(conjugate(parse_pauli("Z"), single(1, gate_h(1)))) ==
        "+X");
  CHECK(format_pauli(conjugate(parse_pauli("Y"), single(1, gate_hy(1)))) ==
        "+X");
  CHECK(format_pauli(conjugate(parse_pauli("X"), single(1, gate_hy(1)))) ==
        "+Y");
  CHECK(format_pauli(conjugate(parse_pauli("Y"), single(1, gate_h(1)))) ==
        "-Y");
  CHECK(format_pauli(conjugate(parse_pauli("Z"), single(1, gate_x(1)))) ==
        "-Z");
}

TEST_CASE("every gate kind conjugates exactly like its dense matrix") {
  for (const auto& g :
       {gate_h(1), gate_h(2), gate_hy(1), gate_hy(2), gate_x(1), gate_z(2),
        gate_cnot(1, 2), gate_cnot(2, 1), gate_swap(1, 2)}) {
    for (uint64_t idx = 0; idx < class_count(2); ++idx) {
      PauliClass c = class_at(2, idx);
      for (int phase = 0; phase < 4; ++phase) {
        PauliOperator p{2, c.x, c.z, phase};
        REQUIRE(conjugation_error(p, single(2, g)) < 1e-12);
      }
    }
  }
}

TEST_CASE("random circuits conjugate exactly like their dense unitaries") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 50; ++trial) {
    CliffordCircuit c = random_circuit(rng, 3, 20);
    PauliOperator p = random_pauli(rng, 3);
    REQUIRE(conjugation_error(p, c) < 1e-11);
  }
}

TEST_CASE("conjugation preserves commutation relations") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    CliffordCircuit c = random_circuit(rng, 4, 15);
    PauliOperator p = random_pauli(rng, 4);
    PauliOperator q = random_pauli(rng, 4);
    CHECK(commutes(p, q) == commutes(conjugate(p, c), conjugate(q, c)));
  }
}

TEST_CASE("invert_circuit round-trips") {
  CHECK(invert_circuit(single(2, gate_cnot(1, 2))) ==
        single(2, gate_cnot(1, 2)));
  CHECK(invert_circuit(single(1, gate_h(1))) == single(1, gate_h(1)));

  std::mt19937_64 rng(161);
  for (int trial = 0; trial < 100; ++trial) {
    CliffordCircuit c = random_circuit(rng, 3, 12);
    CliffordCircuit inv = invert_circuit(c);
    PauliOperator p = random_pauli(rng, 3);
    CHECK(conjugate(conjugate(p, c), inv) == p);
  }
}

TEST_CASE("circuit text round-trips") {
  std::mt19937_64 rng(55);
  CliffordCircuit c = random_circuit(rng, 4, 25);
  CHECK(parse_circuit(format_circuit(c)) == c);
  CHECK_THROWS_AS(parse_circuit("H 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nFOO 1\n"), std::invalid_argument);
}

TEST_CASE("unencoder synthesis for the walkthrough logical choice") {
  // With the logical choice X1=XIIX, X2=XXII, Z1=ZZII, Z2=ZIIZ the
  // constructive steps emit the walkthrough gate list and
  // finish the stabilizers with CNOT 3 4 followed by H 3 (six gates total).
  StabilizerCode code = builtin_422_unencoder_walkthrough();
  CliffordCircuit circuit = synthesize_unencoder(code);
  std::vector<std::string> expected = {"CNOT 1 4", "CNOT 2 1", "CNOT 2 4",
                                       "CNOT 4 2", "CNOT 3 4", "H 3"};
  CHECK(gate_lines(circuit) == expected);
  CHECK(circuit.gates.size() <= 7);

  UnencoderReport report = verify_unencoder(code, circuit);
  CHECK(report.pass);
  for (const auto& check : report.checks) {
    CHECK(check.ok);
    CHECK(check.actual[0] == '+');  // signs are +1, not merely projective
  }
}

TEST_CASE("unencoder synthesis for the builtin logical choice") {
  StabilizerCode code = builtin_422();
  CliffordCircuit circuit = synthesize_unencoder(code);
  std::vector<std::string> expected = {"CNOT 1 4", "CNOT 3 1", "CNOT 4 1",
                                       "SWAP 2 3", "CNOT 2 4", "CNOT 4 2",
                                       "CNOT 3 4", "H 3"};
  CHECK(gate_lines(circuit) == expected);
  CHECK(verify_unencoder(code, circuit).pass);
}

TEST_CASE("trivial codes synthesize to empty circuits") {
  for (auto [n, k] : {std::pair{4, 2}, {1, 1}, {3, 0}, {5, 5}}) {
    StabilizerCode code = trivial_code(n, k);
    CliffordCircuit circuit = synthesize_unencoder(code);
    CHECK(circuit.gates.empty());
    CHECK(verify_unencoder(code, circuit).pass);
  }
}

TEST_CASE("verify_unencoder reports the first failing operator") {
  StabilizerCode code = builtin_422();
  CliffordCircuit empty{4, {}};
  UnencoderReport report = verify_unencoder(code, empty);
  CHECK_FALSE(report.pass);
  CHECK(report.checks[0].label == "X-bar_1");
  CHECK_FALSE(report.checks[0].ok);
  CHECK(report.first_failure().find("X-bar_1") != std::string::npos);

  CHECK(verify_unencoder(trivial_code(3, 1), CliffordCircuit{3, {}}).pass);
}

TEST_CASE("synthesis handles logical pairs with Y components") {
  // Z-bar = Y exercises the axis rotation special case at the active qubit.
  StabilizerCode code = make_code("xy", 1, 1, {}, {"+X"}, {"+Y"});
  CliffordCircuit circuit = synthesize_unencoder(code);
  CHECK(verify_unencoder(code, circuit).pass);

  StabilizerCode code2 = make_code("yy", 2, 1, {"+XX"}, {"+XI"}, {"+YY"});
  CHECK(verify_unencoder(code2, synthesize_unencoder(code2)).pass);
}

TEST_CASE("synthesis succeeds on random Clifford conjugates") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 30; ++trial) {
    StabilizerCode base = (trial % 2) ? builtin_422() : trivial_code(4, 2);
    StabilizerCode code = conjugate_code(base, random_circuit(rng, 4, 18));
    CliffordCircuit circuit = synthesize_unencoder(code);
    REQUIRE(verify_unencoder(code, circuit).pass);
  }
  for (int trial = 0; trial < 10; ++trial) {
    StabilizerCode code =
        conjugate_code(trivial_code(5, 2), random_circuit(rng, 5, 22));
    REQUIRE(verify_unencoder(code, synthesize_unencoder(code)).pass);
  }
}

TEST_CASE("synthesis is idempotent in effect") {
  StabilizerCode code = builtin_422();
  CliffordCircuit w = synthesize_unencoder(code);
  StabilizerCode image = conjugate_code(code, w);
  CHECK(synthesize_unencoder(image).gates.empty());
}

TEST_CASE("recovery table for the builtin 422 code") {
  StabilizerCode code = builtin_422();
  RecoveryTable table = derive_recovery_table(code, synthesize_unencoder(code));
  REQUIRE(table.by_syndrome.size() == 4);
  CHECK(table.by_syndrome[0] == identity_op(4));
  // Weight-one recoveries on qubit 2 up to stabilizer factors, matching the
  // P (x) Q (x) P (x) P structure of the undecoupled errors.
  CHECK(format_pauli(table.by_syndrome[1]) == "+IZII");
  CHECK(format_pauli(table.by_syndrome[2]) == "+XIXX");
  CHECK(format_pauli(table.by_syndrome[3]) == "+XZXX");
  // The syndrome-2 and -3 entries are stabilizer multiples of IXII / IYII.
  CHECK(code.in_stabilizer(
      multiply(pauli_class(table.by_syndrome[2]), parse_class("IXII"))));
  CHECK(code.in_stabilizer(
      multiply(pauli_class(table.by_syndrome[3]), parse_class("IYII"))));

  // Anticommutation pattern invariant.
  for (uint32_t s = 0; s < 4; ++s) {
    for (int j = 0; j < 2; ++j) {
      CHECK(commutes(table.by_syndrome[s], code.stabilizer_gens[j]) ==
            !((s >> j) & 1));
    }
  }
}

TEST_CASE("recovery table for the walkthrough logical choice") {
  StabilizerCode code = builtin_422_unencoder_walkthrough();
  RecoveryTable table = derive_recovery_table(code, synthesize_unencoder(code));
  CHECK(format_pauli(table.by_syndrome[1]) == "+IIZI");
  CHECK(format_pauli(table.by_syndrome[2]) == "+XXIX");
}

TEST_CASE("derive_recovery_table rejects a failing unencoder") {
  StabilizerCode code = builtin_422();
  CHECK_THROWS_AS(derive_recovery_table(code, CliffordCircuit{4, {}}),
                  std::invalid_argument);
}
