#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qldd/clifford.hpp"
#include "qldd/pauli.hpp"
#include "qldd/stabcode.hpp"

namespace qldd {

struct DecouplingGroup {
  std::vector<PauliClass> generators;  // ordered; order matters for sequences
  GeneratedGroup group;
};

enum class GroupVariant { Canonical, ZFree };

// Canonical: the code's own logical generators (X1..Xk, Z1..Zk). ZFree: the
// fixed Z-less generating set {XXII, IIYY, IYIY, XIXI} of the alternative
// logical group of the four-qubit code; rejected for other codes.
DecouplingGroup ldd_group(const StabilizerCode& code, GroupVariant variant);

DecouplingGroup group_from_generators(int n,
                                      const std::vector<PauliClass>& gens);

// True iff some generator anticommutes with p. Commuting with every
// generator implies commuting with the whole group.
bool is_decoupled(const PauliClass& p, const DecouplingGroup& g);

struct DecoupledCensus {
  uint64_t decoupled = 0;
  uint64_t undecoupled = 0;
  uint64_t undecoupled_in_stabilizer = 0;
  uint64_t undecoupled_detectable = 0;
  uint64_t decoupled_logical = 0;

  friend bool operator==(const DecoupledCensus&,
                         const DecoupledCensus&) = default;
};

// Exhaustive sweep over 4^n classes (n <= 8). Parallel kernel plus the
// serial reference kept for testing.
DecoupledCensus decoupled_census(const DecouplingGroup& g,
                                 const StabilizerCode& code);
DecoupledCensus decoupled_census_serial(const DecouplingGroup& g,
                                        const StabilizerCode& code);

std::vector<PauliClass> undecoupled_classes(const DecouplingGroup& g,
                                            const StabilizerCode& code);

struct TheoremReport {
  uint64_t decoupled = 0;
  uint64_t undecoupled = 0;
  bool logical_all_decoupled = true;
  bool undecoupled_all_correctable = true;
  bool converse_holds = true;  // no decoupled detectable class is corrected
  int uncorrectable_single_qubit = 0;  // decoupled weight-1 classes
  bool single_qubit_bound_ok = true;   // >= 3k
  int k = 0;

  // Witnesses for the first two flags, capped; mod-stabilizer reduced
  // representatives of the undecoupled weight-1 detectable classes.
  std::vector<PauliClass> undecoupled_logical_witnesses;
  std::vector<PauliClass> uncorrected_witnesses;
  std::vector<PauliClass> corrected_decoupled_witnesses;
  std::vector<PauliClass> undecoupled_weight1_detectable;

  bool pass() const {
    return logical_all_decoupled && undecoupled_all_correctable &&
           converse_holds && single_qubit_bound_ok;
  }
};

// Checks, over all 4^n classes: (a) every logical class is decoupled,
// (b) every undecoupled class is a stabilizer or is corrected by the table
// up to a stabilizer, (c) no decoupled detectable class is corrected, and
// (d) the decoupled single-qubit error count is at least 3k.
TheoremReport verify_qec_ldd(const StabilizerCode& code,
                             const DecouplingGroup& g,
                             const RecoveryTable& recovery);

// Keeps exactly the undecoupled terms; decoupled terms average to zero.
std::vector<std::pair<double, PauliClass>> group_average(
    const DecouplingGroup& g,
    const std::vector<std::pair<double, PauliClass>>& terms);

// --- Pulse sequences -------------------------------------------------------

// A pi rotation about an axis in the XY plane (phase 0 = X, 90 = Y), with
// sign -1 denoting a -pi rotation, or an idle slot.
struct PulseAction {
  bool idle = true;
  double phase_deg = 0.0;
  int sign = 1;

  friend bool operator==(const PulseAction&, const PulseAction&) = default;
};

PulseAction idle_action();
PulseAction x_action(int sign = 1);
PulseAction y_action(int sign = 1);

struct PulseLayer {
  std::vector<PulseAction> actions;  // one per qubit

  friend bool operator==(const PulseLayer&, const PulseLayer&) = default;
};

// Projective class of the layer (Idle -> I). Throws for non-axis phases.
PauliClass layer_class(const PulseLayer& layer);

struct PulseSequence {
  std::string name;
  int n = 0;
  double tau_us = 0.0;  // inter-pulse delay
  std::vector<PulseLayer> layers;

  double cycle_time_us() const { return tau_us * layers.size(); }
};

// One line per layer with per-qubit tokens from {., X, Y, x, y}; lowercase
// is a negative rotation. Round-trips losslessly.
std::string format_sequence(const PulseSequence& seq);
PulseSequence parse_sequence(const std::string& text);

// Gray-code traversal of the group generated by the ordered list: layer j is
// the single generator flipped between consecutive reflected-binary words.
// The cumulative products visit every group element and close to identity.
// Throws when generators are dependent or a layer would need a Z pulse.
PulseSequence gray_sequence(const std::vector<PauliClass>& ordered_generators,
                            double tau_us);

enum class SequenceName { XY4, SXY4, LXX, LXY4, RLXX, RLXY4, UR4 };

SequenceName parse_sequence_name(const std::string& name);

// Fixed layer tables; 1 qubit for XY4/UR4, 4 qubits otherwise.
PulseSequence named_sequence(SequenceName name, double tau_us);
PulseSequence named_sequence(const std::string& name, double tau_us);

// Single-qubit sequence of pi pulses about explicit XY-plane phases (deg).
PulseSequence phased_pi_sequence(const std::vector<double>& phases_deg,
                                 double tau_us, const std::string& name);

// True iff any layer class has a bare Z component on some qubit.
bool contains_z(const PulseSequence& seq);

// Sign of p under the cumulative pulse frame before each interval; a static
// term is first-order cancelled over a cycle iff the signs sum to zero.
std::vector<int> toggled_signs(const PulseSequence& seq, const PauliClass& p);

enum class BudgetMethod { PauliGroup, SLDD, LDD };

// Pulses per cycle for full Pauli-group DD (2^2n), SLDD (2^{n+k}) and LDD
// (2^2k).
uint64_t pulse_budget(BudgetMethod method, int n, int k);

}  // namespace qldd
