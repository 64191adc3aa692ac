#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qldd {

// An n-qubit Pauli with exact phase tracking in symplectic form:
//
//   P = i^phase_exp * prod_j X_j^{x_j} * prod_j Z_j^{z_j}
//
// Qubit j (1-based, leftmost character of the text form) lives in bit j-1 of
// x and z. A Y on qubit j is x_j = z_j = 1 with the factor i of Y = i*X*Z
// absorbed into phase_exp, so "+Y" is (x=1, z=1, phase_exp=1).
struct PauliOperator {
  int n = 0;
  uint32_t x = 0;
  uint32_t z = 0;
  int phase_exp = 0;  // exponent of i, mod 4

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

// A Pauli modulo global phase. There are exactly 4^n classes for n qubits.
struct PauliClass {
  int n = 0;
  uint32_t x = 0;
  uint32_t z = 0;

  friend bool operator==(const PauliClass&, const PauliClass&) = default;
};

// Deterministic integer encoding, x-major: idx = (x << n) | z. Enumeration
// and group-element ordering both use it so outputs are reproducible.
uint64_t class_key(const PauliClass& c);
uint64_t class_count(int n);
PauliClass class_at(int n, uint64_t idx);

// All 4^n classes in key order. Capped at n <= 8; use class_at for streaming.
std::vector<PauliClass> enumerate_classes(int n);

PauliOperator identity_op(int n);
// kind is one of 'X', 'Y', 'Z'; qubit is 1-based.
PauliOperator single_qubit_op(int n, int qubit, char kind);

// Parses an optional phase prefix from {+, -, +i, -i} followed by {I,X,Y,Z}^n,
// n <= 16. Throws std::invalid_argument on malformed input.
PauliOperator parse_pauli(const std::string& text);
PauliClass parse_class(const std::string& text);

// Canonical text form, always carrying an explicit phase prefix.
std::string format_pauli(const PauliOperator& p);
std::string format_class(const PauliClass& c);

// Component of p on the given 1-based qubit: 'I', 'X', 'Y' or 'Z'.
char component(const PauliOperator& p, int qubit);
char component(const PauliClass& p, int qubit);

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
PauliClass multiply(const PauliClass& a, const PauliClass& b);

bool commutes(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliClass& a, const PauliClass& b);
bool commutes(const PauliClass& a, const PauliOperator& b);

// Number of qubits acted on non-trivially.
int weight(const PauliClass& p);
int weight(const PauliOperator& p);

// True iff P^2 = +I, i.e. phase_exp plus the Y count is even.
bool is_hermitian(const PauliOperator& p);
// +1 or -1 for a Hermitian operator with no Y components; throws otherwise.
int sign_of(const PauliOperator& p);

PauliClass pauli_class(const PauliOperator& p);

// Projectively closed set generated by `generators` (always contains the
// identity). Elements are stored sorted by class_key.
struct GeneratedGroup {
  int n = 0;
  std::vector<PauliClass> generators;
  std::vector<PauliClass> elements;

  uint64_t order() const { return elements.size(); }
  bool contains(const PauliClass& c) const;
};

// Throws if the closure would exceed `cap` elements or sizes are mixed.
GeneratedGroup generate_group(int n, const std::vector<PauliClass>& generators,
                              uint64_t cap);

}  // namespace qldd
