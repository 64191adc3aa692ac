#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qldd/clifford.hpp"
#include "qldd/ldd.hpp"
#include "qldd/noise.hpp"
#include "qldd/state.hpp"

namespace qldd {

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

BellLabel parse_bell_label(const std::string& text);  // "Phi+", "Psi-", ...
std::string to_string(BellLabel label);

// logical identity / X / Y / Z on one logical qubit, the operator relating
// two Bell labels.
enum class LogicalRelation { Identity, X, Y, Z };
LogicalRelation bell_relation(BellLabel from, BellLabel to);
BellLabel apply_relation(BellLabel from, LogicalRelation op);

// Encoding circuit for the encoded Bell state: a Bell pair on qubits (1,2)
// and one on (3,4), then the SWAP(2,3) that realizes the logical CNOT.
CliffordCircuit encode_bell(BellLabel chi);

// encode_bell applied to |0000>.
Statevector bell_state(BellLabel chi);

enum class OutcomeClass { Fidelity, LogicalX, LogicalY, LogicalZ,
                          PhysicalDetected };

const char* to_string(OutcomeClass c);

// The four basis strings the unencoded logical basis lands on, in the order
// identity/X/Z/Y relative to the unencoding label.
std::array<uint32_t, 4> logical_basis_strings();

// Interpretation of a measured 4-bit string for the chi -> chi' procedure.
// Odd-parity strings and even strings outside the logical basis are
// detected physical errors.
OutcomeClass classify_bitstring(uint32_t bits, BellLabel chi,
                                BellLabel chi_prime);

struct Histogram {
  std::array<uint64_t, 16> counts{};
  uint64_t total = 0;

  void add(uint32_t bits, uint64_t n = 1);
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

struct ExperimentSpec {
  // The Bell-state machinery is tied to the four-qubit k=2 code with
  // stabilizers XXXX and ZZZZ; any code spec with that structure is valid.
  std::string code = "builtin:422";
  BellLabel chi = BellLabel::PhiPlus;
  BellLabel chi_prime = BellLabel::PhiPlus;
  std::vector<double> delays_us;
  std::optional<PulseSequence> sequence;  // none = free evolution
  uint64_t shots = 0;
  uint64_t seed = 0;
  NoiseModel noise;
  std::vector<int> qubit_chain = {1, 2, 3, 4};

  void validate() const;
};

struct DelayResult {
  double requested_us = 0.0;
  double effective_us = 0.0;  // rounded down to whole sequence cycles
  int cycles = 0;
  Histogram histogram;
};

// Monte Carlo run: per shot the quasi-static detunings are resampled from
// the per-shot stream keyed by (seed, shot index), the state is encoded,
// evolved (with pulse layers after each tau interval when a sequence is
// set), unencoded into chi', and sampled. Bit-identical for any number of
// OpenMP workers.
std::vector<DelayResult> run_experiment(const ExperimentSpec& spec);

// Single deterministic trajectory with explicitly fixed detunings; returns
// the final state just before measurement.
Statevector simulate_delay_state(BellLabel chi, BellLabel chi_prime,
                                 const std::optional<PulseSequence>& sequence,
                                 const NoiseModel& noise,
                                 const std::vector<double>& fixed_detunings,
                                 double delay_us);

double effective_delay(const std::optional<PulseSequence>& sequence,
                       double delay_us, int* cycles_out);

// Filters to the logical-basis strings; discard_rate is the discarded
// fraction. With all-diagonal noise only odd-parity strings are discarded.
struct PostselectResult {
  Histogram kept;
  double discard_rate = 0.0;
  bool all_discarded = false;
};

PostselectResult postselect(const Histogram& h);

struct FidelityEstimate {
  double value = 0.0;
  double std_err = 0.0;  // binomial
};

// Frequency of the chi-fidelity string; denominator is every shot or the
// postselected total. Throws when the denominator is empty.
FidelityEstimate estimate_fidelity(const Histogram& h, BellLabel chi,
                                   BellLabel chi_prime, bool postselected);

double outcome_frequency(const Histogram& h, BellLabel chi,
                         BellLabel chi_prime, OutcomeClass which);

// Relative counts of the {0000, 0110, 0100, 0010} strings over a delay
// sweep, plus the locked attribution of the two odd strings to physical
// Z errors for the Phi+ -> Phi- setting.
struct ErrorCensusRow {
  double delay_us = 0.0;
  double f0000 = 0.0;
  double f0110 = 0.0;
  double f0100 = 0.0;
  double f0010 = 0.0;
};

std::vector<ErrorCensusRow> error_census(const std::vector<DelayResult>& runs);

// Which physical Z errors land on each tracked odd string (Phi+ -> Phi-):
// 0100 <- {Z1, Z3}, 0010 <- {Z2, Z4}.
std::vector<std::pair<uint32_t, std::vector<int>>> z_error_attribution();

}  // namespace qldd
