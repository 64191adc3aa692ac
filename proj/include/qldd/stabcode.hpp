#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qldd/pauli.hpp"

namespace qldd {

// An [[n,k]] stabilizer code with an explicit choice of canonical logical
// generators. The logical choice is part of the code's identity here: the
// decoupling groups and recovery tables built from a code depend on it.
struct StabilizerCode {
  std::string name;
  int n = 0;
  int k = 0;
  std::vector<PauliOperator> stabilizer_gens;  // n-k of them, in declared order
  std::vector<PauliOperator> logical_x;        // X-bar_1 .. X-bar_k
  std::vector<PauliOperator> logical_z;        // Z-bar_1 .. Z-bar_k

  // Projective stabilizer group, 2^(n-k) classes sorted by class_key.
  std::vector<PauliClass> stabilizer_set;

  bool in_stabilizer(const PauliClass& c) const;
};

enum class ErrorClass { StabilizerPart, LogicalPart, DetectablePart };

const char* to_string(ErrorClass c);

// Bit j (0-based) is 1 iff the error anticommutes with stabilizer generator
// j, in the code's declared generator order.
struct Syndrome {
  uint32_t bits = 0;
  int length = 0;

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

std::string format_syndrome(const Syndrome& s);

// Validates and freezes a code. Throws std::invalid_argument on: count
// mismatches, non-Hermitian generators, non-commuting stabilizers, -I in the
// sign-tracked stabilizer closure, dependent stabilizer generators, or a
// wrong canonical commutation pattern among the logicals.
StabilizerCode make_code(std::string name, int n, int k,
                         std::vector<std::string> stabilizers,
                         std::vector<std::string> logical_x,
                         std::vector<std::string> logical_z);

// JSON record with fields name, n, k, stabilizers, logical_x, logical_z.
StabilizerCode load_code(const std::string& json_text);
StabilizerCode load_code_file(const std::string& path);
std::string code_to_json(const StabilizerCode& code);

// The four-qubit error detection code with S = <XXXX, ZZZZ> and logicals
// X1=XIIX, X2=IIXX, Z1=IIZZ, Z2=ZIIZ.
StabilizerCode builtin_422();

// Same code with the alternative logical choice X1=XIIX, X2=XXII, Z1=ZZII,
// Z2=ZIIZ used by the step-by-step unencoder walkthrough.
StabilizerCode builtin_422_unencoder_walkthrough();

// Same code with the Z-free logical choice X1=IXXI, X2=XXII, Z1=XXYY,
// Z2=IZZI, whose logical group has a generating set containing no Z's.
StabilizerCode builtin_422_zfree();

// Stabilizers Z_{k+1}..Z_n, logicals X_j / Z_j on the first k qubits.
StabilizerCode trivial_code(int n, int k);

// Resolves "builtin:422", "builtin:422-zfree", "builtin:422-walkthrough",
// "builtin:trivial-N-K", or a file path.
StabilizerCode resolve_code(const std::string& spec);

Syndrome syndrome(const StabilizerCode& code, const PauliClass& p);
ErrorClass classify_error(const StabilizerCode& code, const PauliClass& p);

struct PartitionCensus {
  uint64_t stabilizer = 0;
  uint64_t logical = 0;
  uint64_t detectable = 0;

  uint64_t total() const { return stabilizer + logical + detectable; }
  friend bool operator==(const PartitionCensus&,
                         const PartitionCensus&) = default;
};

// Exhaustive sweep over all 4^n classes (n <= 8). The parallel kernel is the
// primary; the serial one is the reference implementation kept for testing.
PartitionCensus partition_census(const StabilizerCode& code);
PartitionCensus partition_census_serial(const StabilizerCode& code);

// Closed-form counts (2^{n-k}, 2^{n-k}(4^k - 1), 2^{n+k}(2^{n-k} - 1)).
PartitionCensus partition_census_formula(int n, int k);

// Minimum weight over logical (non-stabilizer centralizer) classes; nullopt
// when k = 0 and the minimum is over an empty set.
std::optional<int> compute_distance(const StabilizerCode& code);
std::optional<int> compute_distance_serial(const StabilizerCode& code);

}  // namespace qldd
