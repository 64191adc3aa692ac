#include "qldd/experiment.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qldd/stats.hpp"

namespace qldd {

namespace {

void check_chain(const std::vector<int>& chain, int n) {
  if (chain.empty()) {
    throw std::invalid_argument("qubit chain must be non-empty");
  }
  std::vector<bool> seen(n + 1, false);
  for (int q : chain) {
    if (q < 1 || q > n || seen[q]) {
      throw std::invalid_argument("qubit chain must list distinct qubits");
    }
    seen[q] = true;
  }
}

}  // namespace

void NoiseModel::validate(int n) const {
  for (const auto& c : zz) {
    if (c.a < 1 || c.a > n || c.b < 1 || c.b > n || c.a == c.b) {
      throw std::invalid_argument("coupling qubits out of range");
    }
    if (c.rate_rad_per_us < 0) {
      throw std::invalid_argument("coupling rate must be non-negative");
    }
  }
  if (static_cast<int>(sigma_z.size()) > n) {
    throw std::invalid_argument("too many detuning entries");
  }
  for (double s : sigma_z) {
    if (s < 0) throw std::invalid_argument("detuning std must be non-negative");
  }
}

NoiseModel chain_zz_noise(const std::vector<int>& chain, double rate,
                          double sigma, int n) {
  check_chain(chain, n);
  NoiseModel m;
  for (size_t j = 0; j + 1 < chain.size(); ++j) {
    m.zz.push_back({chain[j], chain[j + 1], rate});
  }
  m.sigma_z.assign(n, sigma);
  return m;
}

NoiseModel noise_preset(const std::string& name, const std::vector<int>& chain,
                        int n) {
  // 0.15 rad/us is ~24 kHz; 0.02 rad/us is ~3 kHz.
  if (name == "kyiv_like") return chain_zz_noise(chain, 0.15, 0.02, n);
  if (name == "marrakesh_like") return chain_zz_noise(chain, 0.02, 0.02, n);
  throw std::invalid_argument("unknown noise preset '" + name + "'");
}

BellLabel parse_bell_label(const std::string& text) {
  if (text == "Phi+") return BellLabel::PhiPlus;
  if (text == "Phi-") return BellLabel::PhiMinus;
  if (text == "Psi+") return BellLabel::PsiPlus;
  if (text == "Psi-") return BellLabel::PsiMinus;
  throw std::invalid_argument("unknown Bell label '" + text +
                              "' (expected Phi+/Phi-/Psi+/Psi-)");
}

std::string to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus:
      return "Phi+";
    case BellLabel::PhiMinus:
      return "Phi-";
    case BellLabel::PsiPlus:
      return "Psi+";
    case BellLabel::PsiMinus:
      return "Psi-";
  }
  return "?";
}

namespace {

// Klein four-group indices: Phi+ = 0, Psi+ = X, Psi- = Y, Phi- = Z.
int bell_index(BellLabel l) {
  switch (l) {
    case BellLabel::PhiPlus:
      return 0;
    case BellLabel::PsiPlus:
      return 1;
    case BellLabel::PsiMinus:
      return 2;
    case BellLabel::PhiMinus:
      return 3;
  }
  return 0;
}

BellLabel bell_from_index(int idx) {
  switch (idx & 3) {
    case 0:
      return BellLabel::PhiPlus;
    case 1:
      return BellLabel::PsiPlus;
    case 2:
      return BellLabel::PsiMinus;
    default:
      return BellLabel::PhiMinus;
  }
}

int relation_index(LogicalRelation op) {
  switch (op) {
    case LogicalRelation::Identity:
      return 0;
    case LogicalRelation::X:
      return 1;
    case LogicalRelation::Y:
      return 2;
    case LogicalRelation::Z:
      return 3;
  }
  return 0;
}

}  // namespace

LogicalRelation bell_relation(BellLabel from, BellLabel to) {
  switch (bell_index(from) ^ bell_index(to)) {
    case 0:
      return LogicalRelation::Identity;
    case 1:
      return LogicalRelation::X;
    case 2:
      return LogicalRelation::Y;
    default:
      return LogicalRelation::Z;
  }
}

BellLabel apply_relation(BellLabel from, LogicalRelation op) {
  return bell_from_index(bell_index(from) ^ relation_index(op));
}

CliffordCircuit encode_bell(BellLabel chi) {
  bool minus = chi == BellLabel::PhiMinus || chi == BellLabel::PsiMinus;
  bool psi = chi == BellLabel::PsiPlus || chi == BellLabel::PsiMinus;
  CliffordCircuit c;
  c.n = 4;
  // Bell pair on (1,2): H on 2, optional sign, CNOT with control 2.
  c.gates.push_back(gate_h(2));
  if (minus) c.gates.push_back(gate_z(2));
  c.gates.push_back(gate_cnot(2, 1));
  if (psi) c.gates.push_back(gate_x(1));
  // Bell pair on (3,4): H on 3.
  c.gates.push_back(gate_h(3));
  if (minus) c.gates.push_back(gate_z(3));
  c.gates.push_back(gate_cnot(3, 4));
  if (psi) c.gates.push_back(gate_x(4));
  // Logical CNOT between the two encoded qubits.
  c.gates.push_back(gate_swap(2, 3));
  return c;
}

Statevector bell_state(BellLabel chi) {
  Statevector state(4);
  apply_circuit(state, encode_bell(chi));
  return state;
}

const char* to_string(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::Fidelity:
      return "fidelity";
    case OutcomeClass::LogicalX:
      return "logical_x";
    case OutcomeClass::LogicalY:
      return "logical_y";
    case OutcomeClass::LogicalZ:
      return "logical_z";
    case OutcomeClass::PhysicalDetected:
      return "physical_detected";
  }
  return "?";
}

namespace {

// Basis string that chi_second lands on when unencoding with chi_prime,
// computed once per pair by pushing the state through the inverse circuit.
uint32_t image_string(BellLabel chi_second, BellLabel chi_prime) {
  Statevector state = bell_state(chi_second);
  apply_circuit(state, invert_circuit(encode_bell(chi_prime)));
  for (uint32_t b = 0; b < 16; ++b) {
    if (state.probability(b) > 0.5) return b;
  }
  throw std::runtime_error("unencoded Bell state is not a basis string");
}

struct ImageTable {
  // string -> relation index relative to chi_prime; 255 = not in basis
  std::array<uint8_t, 16> relation_of_string;
};

const ImageTable& image_table(BellLabel chi_prime) {
  static std::map<int, ImageTable> cache = [] {
    std::map<int, ImageTable> tables;
    for (int cp = 0; cp < 4; ++cp) {
      BellLabel prime = bell_from_index(cp);
      ImageTable t;
      t.relation_of_string.fill(255);
      for (int rel = 0; rel < 4; ++rel) {
        BellLabel second = bell_from_index(cp ^ rel);
        t.relation_of_string[image_string(second, prime)] =
            static_cast<uint8_t>(rel);
      }
      tables[cp] = t;
    }
    return tables;
  }();
  return cache.at(bell_index(chi_prime));
}

}  // namespace

std::array<uint32_t, 4> logical_basis_strings() {
  // Identity, X, Z, Y images; independent of the unencoding label.
  return {parse_bitstring("0000"), parse_bitstring("1001"),
          parse_bitstring("0110"), parse_bitstring("1111")};
}

OutcomeClass classify_bitstring(uint32_t bits, BellLabel chi,
                                BellLabel chi_prime) {
  if (bits > 15) throw std::invalid_argument("bitstring must have 4 bits");
  if (bit_parity(bits)) return OutcomeClass::PhysicalDetected;
  uint8_t rel_to_prime = image_table(chi_prime).relation_of_string[bits];
  if (rel_to_prime == 255) return OutcomeClass::PhysicalDetected;
  // The state before unencoding was rel_to_prime applied to chi_prime;
  // reexpress relative to the prepared state chi.
  BellLabel second = bell_from_index(bell_index(chi_prime) ^ rel_to_prime);
  switch (bell_relation(chi, second)) {
    case LogicalRelation::Identity:
      return OutcomeClass::Fidelity;
    case LogicalRelation::X:
      return OutcomeClass::LogicalX;
    case LogicalRelation::Y:
      return OutcomeClass::LogicalY;
    case LogicalRelation::Z:
      return OutcomeClass::LogicalZ;
  }
  return OutcomeClass::PhysicalDetected;
}

void Histogram::add(uint32_t bits, uint64_t n) {
  counts.at(bits) += n;
  total += n;
}

void ExperimentSpec::validate() const {
  StabilizerCode c = resolve_code(code);
  if (c.n != 4 || c.k != 2 ||
      c.stabilizer_set != builtin_422().stabilizer_set) {
    throw std::invalid_argument(
        "experiment requires the four-qubit k=2 code with stabilizers "
        "XXXX and ZZZZ");
  }
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  for (double d : delays_us) {
    if (d < 0) throw std::invalid_argument("delays must be non-negative");
  }
  if (sequence && sequence->n != 4) {
    throw std::invalid_argument("sequence must act on the 4 code qubits");
  }
  if (sequence && sequence->tau_us <= 0) {
    throw std::invalid_argument("sequence pulse interval must be positive");
  }
  check_chain(qubit_chain, 4);
  noise.validate(4);
}

double effective_delay(const std::optional<PulseSequence>& sequence,
                       double delay_us, int* cycles_out) {
  if (!sequence) {
    if (cycles_out) *cycles_out = 0;
    return delay_us;
  }
  double cycle = sequence->cycle_time_us();
  int cycles = static_cast<int>(std::floor(delay_us / cycle + 1e-9));
  if (cycles_out) *cycles_out = cycles;
  return cycles * cycle;
}

namespace {

void evolve_one_shot(Statevector& state, const ExperimentSpec& spec,
                     const std::vector<double>& detunings, double delay_us,
                     int cycles) {
  if (!spec.sequence) {
    apply_diagonal_evolution(state, spec.noise.zz, detunings, delay_us);
    return;
  }
  const PulseSequence& seq = *spec.sequence;
  for (int c = 0; c < cycles; ++c) {
    for (const auto& layer : seq.layers) {
      apply_diagonal_evolution(state, spec.noise.zz, detunings, seq.tau_us);
      apply_pulse_layer(state, layer, spec.noise.pulse_over_rotation);
    }
  }
}

uint32_t sample_bitstring(const Statevector& state, ShotRng& rng) {
  double u = rng.next_double();
  double total = 0.0;
  for (const auto& a : state.amp) total += std::norm(a);
  double target = u * total;
  double cum = 0.0;
  uint32_t last = static_cast<uint32_t>(state.amp.size()) - 1;
  for (uint32_t b = 0; b <= last; ++b) {
    cum += std::norm(state.amp[b]);
    if (target < cum) return b;
  }
  return last;
}

std::vector<double> sample_detunings(const NoiseModel& noise, ShotRng& rng) {
  std::vector<double> d(noise.sigma_z.size(), 0.0);
  for (size_t q = 0; q < d.size(); ++q) {
    // Draw unconditionally so the stream layout does not depend on sigma.
    double g = rng.next_normal();
    d[q] = noise.sigma_z[q] * g;
  }
  return d;
}

}  // namespace

std::vector<DelayResult> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const CliffordCircuit encoder = encode_bell(spec.chi);
  const CliffordCircuit unencoder = invert_circuit(encode_bell(spec.chi_prime));

  std::vector<DelayResult> results;
  for (size_t d = 0; d < spec.delays_us.size(); ++d) {
    DelayResult res;
    res.requested_us = spec.delays_us[d];
    res.effective_us = effective_delay(spec.sequence, res.requested_us,
                                       &res.cycles);

    const int64_t shots = static_cast<int64_t>(spec.shots);
#pragma omp parallel
    {
      Histogram local;
#pragma omp for schedule(static) nowait
      for (int64_t shot = 0; shot < shots; ++shot) {
        ShotRng rng(spec.seed, static_cast<uint64_t>(shot) * 1000003ull + d);
        std::vector<double> detunings = sample_detunings(spec.noise, rng);
        Statevector state(4);
        apply_circuit(state, encoder);
        evolve_one_shot(state, spec, detunings, res.effective_us, res.cycles);
        apply_circuit(state, unencoder);
        local.add(sample_bitstring(state, rng));
      }
#pragma omp critical(qldd_hist_merge)
      {
        for (size_t b = 0; b < local.counts.size(); ++b) {
          res.histogram.counts[b] += local.counts[b];
        }
        res.histogram.total += local.total;
      }
    }
    results.push_back(std::move(res));
  }
  return results;
}

Statevector simulate_delay_state(BellLabel chi, BellLabel chi_prime,
                                 const std::optional<PulseSequence>& sequence,
                                 const NoiseModel& noise,
                                 const std::vector<double>& fixed_detunings,
                                 double delay_us) {
  ExperimentSpec spec;
  spec.chi = chi;
  spec.chi_prime = chi_prime;
  spec.sequence = sequence;
  spec.noise = noise;
  spec.shots = 1;
  int cycles = 0;
  double effective = effective_delay(sequence, delay_us, &cycles);
  Statevector state(4);
  apply_circuit(state, encode_bell(chi));
  evolve_one_shot(state, spec, fixed_detunings, effective, cycles);
  apply_circuit(state, invert_circuit(encode_bell(chi_prime)));
  return state;
}

PostselectResult postselect(const Histogram& h) {
  PostselectResult result;
  for (uint32_t b : logical_basis_strings()) {
    result.kept.add(b, h.counts[b]);
  }
  // Continue reporting even when everything was discarded; flag it instead
  // of dividing by zero downstream.
  result.discard_rate =
      h.total == 0 ? 0.0
                   : 1.0 - static_cast<double>(result.kept.total) /
                               static_cast<double>(h.total);
  result.all_discarded = h.total > 0 && result.kept.total == 0;
  return result;
}

FidelityEstimate estimate_fidelity(const Histogram& h, BellLabel chi,
                                   BellLabel chi_prime, bool postselected) {
  uint64_t fid_count = 0;
  for (uint32_t b = 0; b < 16; ++b) {
    if (classify_bitstring(b, chi, chi_prime) == OutcomeClass::Fidelity) {
      fid_count += h.counts[b];
    }
  }
  uint64_t denom = h.total;
  if (postselected) {
    denom = 0;
    for (uint32_t b : logical_basis_strings()) denom += h.counts[b];
  }
  if (denom == 0) {
    throw std::runtime_error("fidelity denominator is empty");
  }
  FidelityEstimate est;
  est.value = static_cast<double>(fid_count) / static_cast<double>(denom);
  est.std_err = binomial_stderr(est.value, denom);
  return est;
}

double outcome_frequency(const Histogram& h, BellLabel chi,
                         BellLabel chi_prime, OutcomeClass which) {
  if (h.total == 0) return 0.0;
  uint64_t count = 0;
  for (uint32_t b = 0; b < 16; ++b) {
    if (classify_bitstring(b, chi, chi_prime) == which) count += h.counts[b];
  }
  return static_cast<double>(count) / static_cast<double>(h.total);
}

std::vector<ErrorCensusRow> error_census(const std::vector<DelayResult>& runs) {
  std::vector<ErrorCensusRow> rows;
  for (const auto& run : runs) {
    ErrorCensusRow row;
    row.delay_us = run.effective_us;
    double total = static_cast<double>(run.histogram.total);
    if (total > 0) {
      row.f0000 = run.histogram.counts[parse_bitstring("0000")] / total;
      row.f0110 = run.histogram.counts[parse_bitstring("0110")] / total;
      row.f0100 = run.histogram.counts[parse_bitstring("0100")] / total;
      row.f0010 = run.histogram.counts[parse_bitstring("0010")] / total;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::pair<uint32_t, std::vector<int>>> z_error_attribution() {
  return {{parse_bitstring("0100"), {2, 4}}, {parse_bitstring("0010"), {1, 3}}};
}

}  // namespace qldd
