#include "qldd/ldd.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qldd {

namespace {

constexpr size_t kWitnessCap = 8;

std::vector<PauliClass> classes_of(const std::vector<PauliOperator>& ops) {
  std::vector<PauliClass> out;
  out.reserve(ops.size());
  for (const auto& p : ops) out.push_back(pauli_class(p));
  return out;
}

// Stabilizer-coset representative of c: lowest weight wins, then lowest
// class_key, so a weight-1 error reduces to a weight-1 name.
PauliClass coset_representative(const StabilizerCode& code,
                                const PauliClass& c) {
  PauliClass best = c;
  for (const auto& s : code.stabilizer_set) {
    PauliClass m = multiply(c, s);
    if (weight(m) < weight(best) ||
        (weight(m) == weight(best) && class_key(m) < class_key(best))) {
      best = m;
    }
  }
  return best;
}

}  // namespace

DecouplingGroup group_from_generators(int n,
                                      const std::vector<PauliClass>& gens) {
  DecouplingGroup g;
  g.generators = gens;
  g.group = generate_group(n, gens, class_count(n));
  return g;
}

DecouplingGroup ldd_group(const StabilizerCode& code, GroupVariant variant) {
  switch (variant) {
    case GroupVariant::Canonical: {
      std::vector<PauliClass> gens = classes_of(code.logical_x);
      for (const auto& z : classes_of(code.logical_z)) gens.push_back(z);
      return group_from_generators(code.n, gens);
    }
    case GroupVariant::ZFree: {
      if (code.n != 4 || code.k != 2) {
        throw std::invalid_argument(
            "z-free group is defined for the four-qubit k=2 code only");
      }
      StabilizerCode ref = builtin_422();
      if (code.stabilizer_set != ref.stabilizer_set) {
        throw std::invalid_argument(
            "z-free group requires the <XXXX, ZZZZ> stabilizer group");
      }
      DecouplingGroup zfree = group_from_generators(
          4, {parse_class("XXII"), parse_class("IIYY"), parse_class("IYIY"),
              parse_class("XIXI")});
      // The fixed generators must produce the canonical group of the z-free
      // logical choice; cheap self-check of the table.
      DecouplingGroup variant_canonical =
          ldd_group(builtin_422_zfree(), GroupVariant::Canonical);
      if (zfree.group.elements != variant_canonical.group.elements) {
        throw std::runtime_error("z-free generator table is inconsistent");
      }
      return zfree;
    }
  }
  throw std::invalid_argument("unknown group variant");
}

bool is_decoupled(const PauliClass& p, const DecouplingGroup& g) {
  for (const auto& gen : g.generators) {
    if (!commutes(p, gen)) return true;
  }
  return false;
}

namespace {

void census_update(DecoupledCensus& census, const StabilizerCode& code,
                   const DecouplingGroup& g, const PauliClass& c) {
  bool dec = is_decoupled(c, g);
  ErrorClass part = classify_error(code, c);
  if (dec) {
    ++census.decoupled;
    if (part == ErrorClass::LogicalPart) ++census.decoupled_logical;
  } else {
    ++census.undecoupled;
    if (part == ErrorClass::StabilizerPart) ++census.undecoupled_in_stabilizer;
    if (part == ErrorClass::DetectablePart) ++census.undecoupled_detectable;
  }
}

}  // namespace

DecoupledCensus decoupled_census_serial(const DecouplingGroup& g,
                                        const StabilizerCode& code) {
  if (code.n > 8) {
    throw std::invalid_argument("exhaustive census requires n <= 8");
  }
  DecoupledCensus census;
  for (uint64_t idx = 0; idx < class_count(code.n); ++idx) {
    census_update(census, code, g, class_at(code.n, idx));
  }
  return census;
}

DecoupledCensus decoupled_census(const DecouplingGroup& g,
                                 const StabilizerCode& code) {
  if (code.n > 8) {
    throw std::invalid_argument("exhaustive census requires n <= 8");
  }
  const int64_t total = static_cast<int64_t>(class_count(code.n));
  uint64_t dec = 0, undec = 0, undec_s = 0, undec_d = 0, dec_l = 0;
#pragma omp parallel for reduction(+ : dec, undec, undec_s, undec_d, dec_l) \
    schedule(static)
  for (int64_t idx = 0; idx < total; ++idx) {
    PauliClass c = class_at(code.n, idx);
    bool d = is_decoupled(c, g);
    ErrorClass part = classify_error(code, c);
    if (d) {
      ++dec;
      if (part == ErrorClass::LogicalPart) ++dec_l;
    } else {
      ++undec;
      if (part == ErrorClass::StabilizerPart) ++undec_s;
      if (part == ErrorClass::DetectablePart) ++undec_d;
    }
  }
  return DecoupledCensus{dec, undec, undec_s, undec_d, dec_l};
}

std::vector<PauliClass> undecoupled_classes(const DecouplingGroup& g,
                                            const StabilizerCode& code) {
  std::vector<PauliClass> out;
  for (uint64_t idx = 0; idx < class_count(code.n); ++idx) {
    PauliClass c = class_at(code.n, idx);
    if (!is_decoupled(c, g)) out.push_back(c);
  }
  return out;
}

TheoremReport verify_qec_ldd(const StabilizerCode& code,
                             const DecouplingGroup& g,
                             const RecoveryTable& recovery) {
  if (recovery.n != code.n || recovery.k != code.k) {
    throw std::invalid_argument("recovery table does not match code");
  }
  TheoremReport report;
  report.k = code.k;
  std::set<uint64_t> weight1_reps;

  const int64_t total = static_cast<int64_t>(class_count(code.n));
#pragma omp parallel
  {
    TheoremReport local;
    std::set<uint64_t> local_reps;
#pragma omp for schedule(static) nowait
    for (int64_t idx = 0; idx < total; ++idx) {
      PauliClass c = class_at(code.n, idx);
      bool dec = is_decoupled(c, g);
      Syndrome s = syndrome(code, c);
      ErrorClass part = s.bits == 0 ? (code.in_stabilizer(c)
                                           ? ErrorClass::StabilizerPart
                                           : ErrorClass::LogicalPart)
                                    : ErrorClass::DetectablePart;
      dec ? ++local.decoupled : ++local.undecoupled;
      if (part == ErrorClass::LogicalPart && !dec) {
        local.logical_all_decoupled = false;
        local.undecoupled_logical_witnesses.push_back(c);
      }
      if (!dec && part == ErrorClass::DetectablePart) {
        PauliClass fixed =
            multiply(pauli_class(recovery.recovery(s)), c);
        if (!code.in_stabilizer(fixed)) {
          local.undecoupled_all_correctable = false;
          local.uncorrected_witnesses.push_back(c);
        }
      }
      if (dec && part == ErrorClass::DetectablePart) {
        PauliClass fixed =
            multiply(pauli_class(recovery.recovery(s)), c);
        if (code.in_stabilizer(fixed)) {
          local.converse_holds = false;
          local.corrected_decoupled_witnesses.push_back(c);
        }
      }
      if (weight(c) == 1) {
        if (dec) {
          ++local.uncorrectable_single_qubit;
        } else if (part == ErrorClass::DetectablePart) {
          local_reps.insert(class_key(coset_representative(code, c)));
        }
      }
    }
#pragma omp critical(qldd_theorem_merge)
    {
      report.decoupled += local.decoupled;
      report.undecoupled += local.undecoupled;
      report.logical_all_decoupled &= local.logical_all_decoupled;
      report.undecoupled_all_correctable &= local.undecoupled_all_correctable;
      report.converse_holds &= local.converse_holds;
      report.uncorrectable_single_qubit += local.uncorrectable_single_qubit;
      auto merge = [](std::vector<PauliClass>& dst,
                      const std::vector<PauliClass>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
      };
      merge(report.undecoupled_logical_witnesses,
            local.undecoupled_logical_witnesses);
      merge(report.uncorrected_witnesses, local.uncorrected_witnesses);
      merge(report.corrected_decoupled_witnesses,
            local.corrected_decoupled_witnesses);
      weight1_reps.insert(local_reps.begin(), local_reps.end());
    }
  }
  for (uint64_t key : weight1_reps) {
    report.undecoupled_weight1_detectable.push_back(class_at(code.n, key));
  }
  report.single_qubit_bound_ok =
      report.uncorrectable_single_qubit >= 3 * code.k;
  // Witness lists must not depend on thread scheduling: sort, then cap.
  auto finish = [](std::vector<PauliClass>& v) {
    std::sort(v.begin(), v.end(), [](const PauliClass& a, const PauliClass& b) {
      return class_key(a) < class_key(b);
    });
    if (v.size() > kWitnessCap) v.resize(kWitnessCap);
  };
  finish(report.undecoupled_logical_witnesses);
  finish(report.uncorrected_witnesses);
  finish(report.corrected_decoupled_witnesses);
  return report;
}

std::vector<std::pair<double, PauliClass>> group_average(
    const DecouplingGroup& g,
    const std::vector<std::pair<double, PauliClass>>& terms) {
  std::vector<std::pair<double, PauliClass>> surviving;
  for (const auto& [coeff, term] : terms) {
    if (term.n != g.group.n) {
      throw std::invalid_argument("term size does not match group");
    }
    if (!is_decoupled(term, g)) surviving.emplace_back(coeff, term);
  }
  return surviving;
}

// --- Pulse sequences -------------------------------------------------------

PulseAction idle_action() { return PulseAction{true, 0.0, 1}; }
PulseAction x_action(int sign) { return PulseAction{false, 0.0, sign}; }
PulseAction y_action(int sign) { return PulseAction{false, 90.0, sign}; }

PauliClass layer_class(const PulseLayer& layer) {
  int n = static_cast<int>(layer.actions.size());
  PauliClass c{n, 0, 0};
  for (int j = 0; j < n; ++j) {
    const PulseAction& a = layer.actions[j];
    if (a.idle) continue;
    if (a.phase_deg == 0.0) {
      c.x |= 1u << j;
    } else if (a.phase_deg == 90.0) {
      c.x |= 1u << j;
      c.z |= 1u << j;
    } else {
      throw std::runtime_error(
          "layer has a non-axis pulse phase; no Pauli class");
    }
  }
  return c;
}

std::string format_sequence(const PulseSequence& seq) {
  std::ostringstream out;
  out << "sequence " << seq.name << "\n";
  out << "qubits " << seq.n << "\n";
  char tau[64];
  std::snprintf(tau, sizeof tau, "%.10g", seq.tau_us);
  out << "tau_us " << tau << "\n";
  for (const auto& layer : seq.layers) {
    for (int j = 0; j < seq.n; ++j) {
      const PulseAction& a = layer.actions[j];
      if (j) out << " ";
      if (a.idle) {
        out << ".";
      } else if (a.phase_deg == 0.0) {
        out << (a.sign > 0 ? "X" : "x");
      } else if (a.phase_deg == 90.0) {
        out << (a.sign > 0 ? "Y" : "y");
      } else {
        throw std::runtime_error(
            "sequence with non-axis phases has no text form");
      }
    }
    out << "\n";
  }
  return out.str();
}

PulseSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  PulseSequence seq;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "sequence") {
      ls >> seq.name;
      continue;
    }
    if (word == "qubits") {
      ls >> seq.n;
      have_header = true;
      continue;
    }
    if (word == "tau_us") {
      ls >> seq.tau_us;
      continue;
    }
    if (!have_header) {
      throw std::invalid_argument("sequence file must declare 'qubits N'");
    }
    PulseLayer layer;
    std::istringstream toks(line);
    std::string tok;
    while (toks >> tok) {
      if (tok == ".") {
        layer.actions.push_back(idle_action());
      } else if (tok == "X") {
        layer.actions.push_back(x_action(+1));
      } else if (tok == "x") {
        layer.actions.push_back(x_action(-1));
      } else if (tok == "Y") {
        layer.actions.push_back(y_action(+1));
      } else if (tok == "y") {
        layer.actions.push_back(y_action(-1));
      } else {
        throw std::invalid_argument("unknown pulse token '" + tok + "'");
      }
    }
    if (static_cast<int>(layer.actions.size()) != seq.n) {
      throw std::invalid_argument("layer has wrong qubit count: " + line);
    }
    seq.layers.push_back(std::move(layer));
  }
  if (!have_header) {
    throw std::invalid_argument("sequence file must declare 'qubits N'");
  }
  return seq;
}

namespace {

PulseLayer layer_from_class(const PauliClass& c) {
  PulseLayer layer;
  layer.actions.resize(c.n, idle_action());
  for (int j = 0; j < c.n; ++j) {
    switch (component(c, j + 1)) {
      case 'I':
        break;
      case 'X':
        layer.actions[j] = x_action(+1);
        break;
      case 'Y':
        layer.actions[j] = y_action(+1);
        break;
      default:
        throw std::invalid_argument(
            "pulse layer " + format_class(c) +
            " needs a Z rotation, which this pulse set does not provide");
    }
  }
  return layer;
}

}  // namespace

PulseSequence gray_sequence(const std::vector<PauliClass>& ordered_generators,
                            double tau_us) {
  if (ordered_generators.empty() || ordered_generators.size() > 8) {
    throw std::invalid_argument("gray_sequence supports 1..8 generators");
  }
  int n = ordered_generators.front().n;
  int r = static_cast<int>(ordered_generators.size());
  GeneratedGroup group = generate_group(n, ordered_generators, class_count(n));
  if (group.order() != (uint64_t{1} << r)) {
    throw std::invalid_argument("gray_sequence requires independent generators");
  }
  PulseSequence seq;
  seq.name = "gray";
  seq.n = n;
  seq.tau_us = tau_us;
  uint64_t count = uint64_t{1} << r;
  for (uint64_t j = 0; j < count; ++j) {
    // Reflected-binary words for consecutive indices differ in exactly the
    // bit below, so each layer is a single generator.
    uint64_t a = j ^ (j >> 1);
    uint64_t b = ((j + 1) % count) ^ (((j + 1) % count) >> 1);
    uint64_t flipped = a ^ b;
    int bit = std::countr_zero(flipped);
    seq.layers.push_back(layer_from_class(ordered_generators[bit]));
  }
  return seq;
}

SequenceName parse_sequence_name(const std::string& name) {
  if (name == "XY4") return SequenceName::XY4;
  if (name == "SXY4") return SequenceName::SXY4;
  if (name == "LXX") return SequenceName::LXX;
  if (name == "LXY4") return SequenceName::LXY4;
  if (name == "RLXX") return SequenceName::RLXX;
  if (name == "RLXY4") return SequenceName::RLXY4;
  if (name == "UR4") return SequenceName::UR4;
  throw std::invalid_argument("unknown sequence name '" + name + "'");
}

namespace {

// Layer builder for the 4-qubit tables: `pattern` places pulses on odd
// (1,3) or even (2,4) chain qubits.
PulseLayer four_qubit_layer(bool odd_qubits, const PulseAction& action) {
  PulseLayer layer;
  layer.actions.resize(4, idle_action());
  for (int q = odd_qubits ? 0 : 1; q < 4; q += 2) layer.actions[q] = action;
  return layer;
}

}  // namespace

PulseSequence named_sequence(SequenceName name, double tau_us) {
  PulseSequence seq;
  seq.tau_us = tau_us;
  switch (name) {
    case SequenceName::XY4:
      seq.name = "XY4";
      seq.n = 1;
      seq.layers = {PulseLayer{{x_action()}}, PulseLayer{{y_action()}},
                    PulseLayer{{x_action()}}, PulseLayer{{y_action()}}};
      return seq;
    case SequenceName::UR4:
      seq.name = "UR4";
      seq.n = 1;
      seq.layers = {PulseLayer{{x_action(+1)}}, PulseLayer{{x_action(-1)}},
                    PulseLayer{{x_action(-1)}}, PulseLayer{{x_action(+1)}}};
      return seq;
    case SequenceName::LXX:
      seq.name = "LXX";
      seq.n = 4;
      seq.layers = {four_qubit_layer(true, x_action()),
                    four_qubit_layer(false, x_action()),
                    four_qubit_layer(true, x_action()),
                    four_qubit_layer(false, x_action())};
      return seq;
    case SequenceName::LXY4:
      seq.name = "LXY4";
      seq.n = 4;
      seq.layers = {four_qubit_layer(true, x_action()),
                    four_qubit_layer(false, y_action()),
                    four_qubit_layer(true, x_action()),
                    four_qubit_layer(false, y_action())};
      return seq;
    case SequenceName::RLXX:
      seq.name = "RLXX";
      seq.n = 4;
      // Each qubit row reads X, -X, -X, X across its four pulsed slots.
      seq.layers = {four_qubit_layer(true, x_action(+1)),
                    four_qubit_layer(false, x_action(+1)),
                    four_qubit_layer(true, x_action(-1)),
                    four_qubit_layer(false, x_action(-1)),
                    four_qubit_layer(true, x_action(-1)),
                    four_qubit_layer(false, x_action(-1)),
                    four_qubit_layer(true, x_action(+1)),
                    four_qubit_layer(false, x_action(+1))};
      return seq;
    case SequenceName::RLXY4:
      seq.name = "RLXY4";
      seq.n = 4;
      seq.layers = {four_qubit_layer(true, x_action(+1)),
                    four_qubit_layer(false, y_action(+1)),
                    four_qubit_layer(true, x_action(-1)),
                    four_qubit_layer(false, y_action(-1)),
                    four_qubit_layer(true, x_action(-1)),
                    four_qubit_layer(false, y_action(-1)),
                    four_qubit_layer(true, x_action(+1)),
                    four_qubit_layer(false, y_action(+1))};
      return seq;
    case SequenceName::SXY4:
      seq.name = "SXY4";
      seq.n = 4;
      // A full XY4 per qubit, offset so chain neighbours never pulse in the
      // same layer.
      seq.layers = {four_qubit_layer(true, x_action()),
                    four_qubit_layer(false, x_action()),
                    four_qubit_layer(true, y_action()),
                    four_qubit_layer(false, y_action()),
                    four_qubit_layer(true, x_action()),
                    four_qubit_layer(false, x_action()),
                    four_qubit_layer(true, y_action()),
                    four_qubit_layer(false, y_action())};
      return seq;
  }
  throw std::invalid_argument("unknown sequence");
}

PulseSequence named_sequence(const std::string& name, double tau_us) {
  return named_sequence(parse_sequence_name(name), tau_us);
}

PulseSequence phased_pi_sequence(const std::vector<double>& phases_deg,
                                 double tau_us, const std::string& name) {
  if (phases_deg.empty()) {
    throw std::invalid_argument("phase list must be non-empty");
  }
  PulseSequence seq;
  seq.name = name;
  seq.n = 1;
  seq.tau_us = tau_us;
  for (double phi : phases_deg) {
    seq.layers.push_back(PulseLayer{{PulseAction{false, phi, +1}}});
  }
  return seq;
}

bool contains_z(const PulseSequence& seq) {
  for (const auto& layer : seq.layers) {
    for (const auto& a : layer.actions) {
      if (!a.idle && a.phase_deg != 0.0 && a.phase_deg != 90.0) {
        throw std::runtime_error("contains_z needs axis pulses");
      }
    }
    PauliClass c = layer_class(layer);
    for (int q = 1; q <= seq.n; ++q) {
      if (component(c, q) == 'Z') return true;
    }
  }
  return false;
}

std::vector<int> toggled_signs(const PulseSequence& seq, const PauliClass& p) {
  if (p.n != seq.n) {
    throw std::invalid_argument("Pauli size does not match sequence");
  }
  std::vector<int> signs;
  signs.reserve(seq.layers.size());
  PauliClass frame{seq.n, 0, 0};
  for (const auto& layer : seq.layers) {
    signs.push_back(commutes(frame, p) ? 1 : -1);
    frame = multiply(frame, layer_class(layer));
  }
  return signs;
}

uint64_t pulse_budget(BudgetMethod method, int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("pulse_budget requires 0 <= k <= n");
  }
  switch (method) {
    case BudgetMethod::PauliGroup:
      return uint64_t{1} << (2 * n);
    case BudgetMethod::SLDD:
      return uint64_t{1} << (n + k);
    case BudgetMethod::LDD:
      return uint64_t{1} << (2 * k);
  }
  throw std::invalid_argument("unknown budget method");
}

}  // namespace qldd
