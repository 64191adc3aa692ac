#include "cli_lib.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>
#include <omp.h>

#include "qldd/stats.hpp"

namespace qldd::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

json census_json(const StabilizerCode& code, const DecouplingGroup& group) {
  PartitionCensus part = partition_census(code);
  DecoupledCensus dec = decoupled_census(group, code);
  json j;
  j["code"] = code.name;
  j["n"] = code.n;
  j["k"] = code.k;
  j["classes"] = class_count(code.n);
  j["partition"] = {{"stabilizer", part.stabilizer},
                    {"logical", part.logical},
                    {"detectable", part.detectable}};
  j["centralizer"] = part.stabilizer + part.logical;
  j["group_order"] = group.group.order();
  j["decoupled"] = {{"undecoupled", dec.undecoupled},
                    {"undecoupled_in_stabilizer", dec.undecoupled_in_stabilizer},
                    {"undecoupled_detectable", dec.undecoupled_detectable},
                    {"decoupled", dec.decoupled},
                    {"decoupled_logical", dec.decoupled_logical},
                    {"decoupled_detectable",
                     dec.decoupled - dec.decoupled_logical}};
  return j;
}

json theorem_json(const TheoremReport& report) {
  auto names = [](const std::vector<PauliClass>& v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(format_class(c));
    return out;
  };
  json j;
  j["pass"] = report.pass();
  j["decoupled"] = report.decoupled;
  j["undecoupled"] = report.undecoupled;
  j["logical_all_decoupled"] = report.logical_all_decoupled;
  j["undecoupled_all_correctable"] = report.undecoupled_all_correctable;
  j["converse_holds"] = report.converse_holds;
  j["uncorrectable_single_qubit"] = report.uncorrectable_single_qubit;
  j["single_qubit_bound_ok"] = report.single_qubit_bound_ok;
  j["min_single_qubit_bound"] = 3 * report.k;
  j["undecoupled_logical_witnesses"] =
      names(report.undecoupled_logical_witnesses);
  j["uncorrected_witnesses"] = names(report.uncorrected_witnesses);
  j["corrected_decoupled_witnesses"] =
      names(report.corrected_decoupled_witnesses);
  j["undecoupled_weight1_detectable"] =
      names(report.undecoupled_weight1_detectable);
  return j;
}

std::vector<PauliClass> parse_generator_list(const std::string& csv) {
  std::vector<PauliClass> gens;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) gens.push_back(parse_class(item));
  }
  if (gens.empty()) {
    throw std::invalid_argument("empty generator list");
  }
  return gens;
}

}  // namespace

DecouplingGroup resolve_group(const StabilizerCode& code,
                              const GroupChoice& choice) {
  if (choice.spec == "canonical") {
    return ldd_group(code, GroupVariant::Canonical);
  }
  if (choice.spec == "z-free") {
    return ldd_group(code, GroupVariant::ZFree);
  }
  if (choice.spec.rfind("generators=", 0) == 0) {
    return group_from_generators(
        code.n, parse_generator_list(choice.spec.substr(11)));
  }
  throw std::invalid_argument("unknown group spec '" + choice.spec +
                              "' (canonical | z-free | generators=...)");
}

RecoveryTable recovery_for_group(const StabilizerCode& code,
                                 const GroupChoice& choice) {
  if (choice.spec == "z-free") {
    StabilizerCode variant = builtin_422_zfree();
    return derive_recovery_table(variant, synthesize_unencoder(variant));
  }
  return derive_recovery_table(code, synthesize_unencoder(code));
}

int cmd_classify(const std::string& code_spec, const std::string& pauli,
                 std::ostream& out) {
  StabilizerCode code = resolve_code(code_spec);
  PauliClass c = parse_class(pauli);
  if (c.n != code.n) {
    throw std::invalid_argument("Pauli length does not match code");
  }
  out << format_class(c) << ": " << to_string(classify_error(code, c))
      << ", syndrome " << format_syndrome(syndrome(code, c)) << "\n";
  return kOk;
}

int cmd_census(const std::string& code_spec, const GroupChoice& group_choice,
               const std::string& json_path, std::ostream& out) {
  StabilizerCode code = resolve_code(code_spec);
  DecouplingGroup group = resolve_group(code, group_choice);
  json j = census_json(code, group);

  out << "code " << code.name << "  n=" << code.n << " k=" << code.k << "\n";
  out << "partition census over " << j["classes"] << " classes:\n";
  out << "  stabilizer   " << j["partition"]["stabilizer"] << "\n";
  out << "  logical      " << j["partition"]["logical"] << "\n";
  out << "  detectable   " << j["partition"]["detectable"] << "\n";
  out << "  centralizer  " << j["centralizer"] << "\n";
  out << "decoupling group (" << group_choice.spec << ", order "
      << j["group_order"] << "):\n";
  out << "  undecoupled            " << j["decoupled"]["undecoupled"] << "\n";
  out << "    in stabilizer        "
      << j["decoupled"]["undecoupled_in_stabilizer"] << "\n";
  out << "    detectable           "
      << j["decoupled"]["undecoupled_detectable"] << "\n";
  out << "  decoupled              " << j["decoupled"]["decoupled"] << "\n";
  out << "    logical              " << j["decoupled"]["decoupled_logical"]
      << "\n";
  out << "    detectable           "
      << j["decoupled"]["decoupled_detectable"] << "\n";
  if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
  return kOk;
}

int cmd_verify_theorem(const std::string& code_spec,
                       const GroupChoice& group_choice,
                       const std::string& json_path, std::ostream& out) {
  StabilizerCode code = resolve_code(code_spec);
  DecouplingGroup group = resolve_group(code, group_choice);
  RecoveryTable recovery = recovery_for_group(code, group_choice);
  TheoremReport report = verify_qec_ldd(code, group, recovery);
  json j = theorem_json(report);

  out << "code " << code.name << ", group " << group_choice.spec << " (order "
      << group.group.order() << ")\n";
  out << "  logical errors all decoupled:   "
      << (report.logical_all_decoupled ? "yes" : "NO") << "\n";
  out << "  undecoupled all correctable:    "
      << (report.undecoupled_all_correctable ? "yes" : "NO") << "\n";
  out << "  converse (decoupled uncorrected): "
      << (report.converse_holds ? "yes" : "NO") << "\n";
  out << "  uncorrectable single-qubit errors: "
      << report.uncorrectable_single_qubit << " (bound " << 3 * report.k
      << ", " << (report.single_qubit_bound_ok ? "ok" : "VIOLATED") << ")\n";
  auto print_witnesses = [&](const char* label,
                             const std::vector<PauliClass>& v) {
    if (v.empty()) return;
    out << "  " << label << ":";
    for (const auto& c : v) out << " " << format_class(c);
    out << "\n";
  };
  print_witnesses("undecoupled logical witnesses",
                  report.undecoupled_logical_witnesses);
  print_witnesses("uncorrected witnesses", report.uncorrected_witnesses);
  print_witnesses("corrected decoupled witnesses",
                  report.corrected_decoupled_witnesses);
  print_witnesses("undecoupled weight-1 detectable (mod stabilizer)",
                  report.undecoupled_weight1_detectable);
  out << (report.pass() ? "PASS" : "FAIL") << "\n";
  if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
  return report.pass() ? kOk : kVerifyFailed;
}

int cmd_synth_unencoder(const std::string& code_spec,
                        const std::string& out_path, std::ostream& out) {
  StabilizerCode code = resolve_code(code_spec);
  CliffordCircuit circuit = synthesize_unencoder(code);
  UnencoderReport report = verify_unencoder(code, circuit);
  out << format_circuit(circuit);
  out << "# gates: " << circuit.gates.size() << "\n";
  for (const auto& check : report.checks) {
    out << "# " << check.label << " -> " << check.actual
        << (check.ok ? "" : "  (expected " + check.expected + ")") << "\n";
  }
  out << "# verification: " << (report.pass ? "PASS" : "FAIL") << "\n";
  if (!out_path.empty()) write_file(out_path, format_circuit(circuit));
  return report.pass ? kOk : kVerifyFailed;
}

int cmd_recovery_table(const std::string& code_spec, std::ostream& out) {
  StabilizerCode code = resolve_code(code_spec);
  RecoveryTable table =
      derive_recovery_table(code, synthesize_unencoder(code));
  out << "code " << code.name << ", " << table.by_syndrome.size()
      << " syndromes\n";
  for (uint32_t s = 0; s < table.by_syndrome.size(); ++s) {
    Syndrome syn{s, code.n - code.k};
    out << format_syndrome(syn) << " -> "
        << format_pauli(table.by_syndrome[s]) << "\n";
  }
  return kOk;
}

int cmd_sequence(const std::string& name, bool gray_zfree,
                 const std::string& generators, double tau_us,
                 const std::string& out_path, std::ostream& out) {
  PulseSequence seq;
  if (!name.empty()) {
    seq = named_sequence(name, tau_us);
  } else if (gray_zfree) {
    // Gray traversal of the z-free group; the generator order is reversed
    // relative to the group's listed generating set so the 16-pulse cycle
    // comes out with its two identical 8-pulse halves.
    seq = gray_sequence({parse_class("XIXI"), parse_class("IYIY"),
                         parse_class("IIYY"), parse_class("XXII")},
                        tau_us);
    seq.name = "gray-zfree";
  } else if (!generators.empty()) {
    seq = gray_sequence(parse_generator_list(generators), tau_us);
  } else {
    throw std::invalid_argument(
        "choose one of --name, --gray-zfree, --generators");
  }
  std::string text = format_sequence(seq);
  out << text;
  out << "# layers: " << seq.layers.size() << ", cycle "
      << fmt(seq.cycle_time_us()) << " us, contains_z: "
      << (contains_z(seq) ? "yes" : "no") << "\n";
  if (!out_path.empty()) write_file(out_path, text);
  return kOk;
}

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed spec file: ") +
                                e.what());
  }
  ExperimentSpec spec;
  try {
    if (j.contains("code")) spec.code = j["code"].get<std::string>();
    spec.chi = parse_bell_label(j.at("chi").get<std::string>());
    spec.chi_prime = parse_bell_label(j.at("chi_prime").get<std::string>());
    spec.delays_us = j.at("delays_us").get<std::vector<double>>();
    spec.shots = j.at("shots").get<uint64_t>();
    spec.seed = j.at("seed").get<uint64_t>();
    if (j.contains("qubit_chain")) {
      spec.qubit_chain = j["qubit_chain"].get<std::vector<int>>();
    }
    if (j.contains("sequence") && !j["sequence"].is_null()) {
      const json& s = j["sequence"];
      if (s.contains("file")) {
        spec.sequence = parse_sequence(read_file(s["file"].get<std::string>()));
        if (s.contains("tau_us")) {
          spec.sequence->tau_us = s["tau_us"].get<double>();
        }
      } else {
        spec.sequence = named_sequence(s.at("name").get<std::string>(),
                                       s.at("tau_us").get<double>());
      }
    }
    const json& n = j.at("noise");
    if (n.contains("preset")) {
      spec.noise = noise_preset(n["preset"].get<std::string>(),
                                spec.qubit_chain, 4);
    } else {
      for (const auto& edge : n.value("zz", json::array())) {
        spec.noise.zz.push_back({edge.at(0).get<int>(), edge.at(1).get<int>(),
                                 edge.at(2).get<double>()});
      }
      if (n.contains("sigma_z")) {
        if (n["sigma_z"].is_number()) {
          spec.noise.sigma_z.assign(4, n["sigma_z"].get<double>());
        } else {
          spec.noise.sigma_z = n["sigma_z"].get<std::vector<double>>();
        }
      }
    }
    if (n.contains("epsilon")) {
      spec.noise.pulse_over_rotation = n["epsilon"].get<double>();
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed spec record: ") +
                                e.what());
  }
  spec.validate();
  return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
  return parse_experiment_spec(read_file(path));
}

namespace {

// Bootstrap std of the postselected fidelity, resampling the kept shots.
double fidelity_bootstrap_std(const Histogram& kept, uint64_t fid_count,
                              uint64_t seed, int resamples) {
  if (kept.total == 0) return 0.0;
  double p = static_cast<double>(fid_count) / kept.total;
  ShotRng rng(seed, 0xF1DE11ull);
  std::vector<double> means;
  means.reserve(resamples);
  for (int r = 0; r < resamples; ++r) {
    uint64_t hits = 0;
    for (uint64_t s = 0; s < kept.total; ++s) {
      if (rng.next_double() < p) ++hits;
    }
    means.push_back(static_cast<double>(hits) / kept.total);
  }
  double mean = 0.0;
  for (double m : means) mean += m;
  mean /= means.size();
  double var = 0.0;
  for (double m : means) var += (m - mean) * (m - mean);
  return std::sqrt(var / means.size());
}

}  // namespace

int cmd_simulate(const std::string& spec_path, const std::string& out_dir,
                 int threads, std::ostream& out, uint64_t seed_override,
                 uint64_t shots_override) {
  ExperimentSpec spec = load_experiment_spec(spec_path);
  if (seed_override) spec.seed = seed_override;
  if (shots_override) spec.shots = shots_override;
  if (threads > 0) omp_set_num_threads(threads);
  std::filesystem::create_directories(out_dir);

  std::vector<DelayResult> results = run_experiment(spec);

  std::ostringstream hist;
  hist << "delay_us,effective_delay_us,bitstring,count\n";
  std::ostringstream summary;
  summary << "delay_us,effective_delay_us,fidelity_raw,fidelity_postselected,"
             "discard_rate,logical_x,logical_y,logical_z,bootstrap_std\n";

  for (size_t d = 0; d < results.size(); ++d) {
    const DelayResult& r = results[d];
    for (uint32_t b = 0; b < 16; ++b) {
      if (r.histogram.counts[b] == 0) continue;
      hist << fmt(r.requested_us) << "," << fmt(r.effective_us) << ","
           << bitstring_text(b, 4) << "," << r.histogram.counts[b] << "\n";
    }
    PostselectResult ps = postselect(r.histogram);
    FidelityEstimate raw =
        estimate_fidelity(r.histogram, spec.chi, spec.chi_prime, false);
    uint64_t fid_count = 0;
    for (uint32_t b = 0; b < 16; ++b) {
      if (classify_bitstring(b, spec.chi, spec.chi_prime) ==
          OutcomeClass::Fidelity) {
        fid_count += r.histogram.counts[b];
      }
    }
    double fid_ps = ps.all_discarded
                        ? 0.0
                        : static_cast<double>(fid_count) / ps.kept.total;
    summary << fmt(r.requested_us) << "," << fmt(r.effective_us) << ","
            << fmt(raw.value) << "," << fmt(fid_ps) << ","
            << fmt(ps.discard_rate) << ","
            << fmt(outcome_frequency(r.histogram, spec.chi, spec.chi_prime,
                                     OutcomeClass::LogicalX))
            << ","
            << fmt(outcome_frequency(r.histogram, spec.chi, spec.chi_prime,
                                     OutcomeClass::LogicalY))
            << ","
            << fmt(outcome_frequency(r.histogram, spec.chi, spec.chi_prime,
                                     OutcomeClass::LogicalZ))
            << ","
            << fmt(fidelity_bootstrap_std(ps.kept, fid_count, spec.seed + d,
                                          500))
            << "\n";
  }

  write_file(out_dir + "/histogram.csv", hist.str());
  write_file(out_dir + "/summary.csv", summary.str());
  out << "wrote " << out_dir << "/histogram.csv and " << out_dir
      << "/summary.csv (" << results.size() << " delays, " << spec.shots
      << " shots each)\n";
  return kOk;
}

int cmd_report(const std::vector<std::string>& summary_paths,
               const std::string& out_path, int resamples, uint64_t seed,
               std::ostream& out) {
  if (summary_paths.empty()) {
    throw std::invalid_argument("report needs at least one summary CSV");
  }
  // delay -> fidelity_postselected per input file.
  std::map<double, std::vector<double>> by_delay;
  for (const auto& path : summary_paths) {
    std::istringstream in(read_file(path));
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::stringstream ls(line);
      std::string field;
      std::vector<std::string> fields;
      while (std::getline(ls, field, ',')) fields.push_back(field);
      if (fields.size() < 4) {
        throw std::invalid_argument("bad summary row in " + path);
      }
      by_delay[std::stod(fields[0])].push_back(std::stod(fields[3]));
    }
  }
  std::ostringstream csv;
  csv << "delay_us,mean_fidelity,std,sets\n";
  for (const auto& [delay, values] : by_delay) {
    BootstrapResult b = bootstrap(values, resamples, seed);
    csv << fmt(delay) << "," << fmt(b.mean) << "," << fmt(b.std_dev) << ","
        << values.size() << "\n";
  }
  if (!out_path.empty()) {
    write_file(out_path, csv.str());
    out << "wrote " << out_path << "\n";
  } else {
    out << csv.str();
  }
  return kOk;
}

}  // namespace qldd::cli
