#include <iostream>

#include <CLI11.hpp>

#include "cli_lib.hpp"

using namespace qldd;

int main(int argc, char** argv) {
  CLI::App app{
      "Stabilizer-code and logical dynamical decoupling toolkit: group "
      "algebra checks, unencoder synthesis, pulse sequences and Bell-state "
      "noise simulations"};
  app.require_subcommand(1);

  std::string code_spec = "builtin:422";
  std::string pauli;
  std::string json_path;
  cli::GroupChoice group;

  auto add_code = [&](CLI::App* cmd) {
    cmd->add_option("--code", code_spec,
                    "builtin:422 | builtin:422-zfree | "
                    "builtin:422-walkthrough | builtin:trivial-N-K | file");
  };
  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", group.spec,
                    "canonical | z-free | generators=XIXI,IYIY,...");
  };

  CLI::App* classify = app.add_subcommand("classify",
                                          "classify a Pauli error class");
  add_code(classify);
  classify->add_option("--pauli", pauli, "Pauli string, e.g. IZII")
      ->required();

  CLI::App* census = app.add_subcommand(
      "census", "partition and decoupled censuses of a code");
  add_code(census);
  add_group(census);
  census->add_option("--json", json_path, "write machine-readable output");

  CLI::App* verify = app.add_subcommand(
      "verify-theorem", "exhaustively check decoupling plus recovery");
  add_code(verify);
  add_group(verify);
  verify->add_option("--json", json_path, "write machine-readable output");

  std::string out_path;
  CLI::App* synth = app.add_subcommand(
      "synth-unencoder", "build and verify the unencoding circuit");
  add_code(synth);
  synth->add_option("--out", out_path, "write the circuit file here");

  CLI::App* recovery = app.add_subcommand(
      "recovery-table", "derive the syndrome-keyed recovery operators");
  add_code(recovery);

  std::string seq_name;
  std::string seq_generators;
  bool gray_zfree = false;
  double tau_us = 0.25;
  CLI::App* sequence = app.add_subcommand("sequence", "emit a pulse sequence");
  sequence->add_option("--name", seq_name,
                       "XY4 | SXY4 | LXX | LXY4 | RLXX | RLXY4 | UR4");
  sequence->add_flag("--gray-zfree", gray_zfree,
                     "Gray traversal of the Z-free logical group");
  sequence->add_option("--generators", seq_generators,
                       "comma-separated ordered generator classes");
  sequence->add_option("--tau", tau_us, "inter-pulse delay in us");
  sequence->add_option("--out", out_path, "write the sequence file here");

  std::string spec_path;
  std::string out_dir = "results";
  int threads = 0;
  uint64_t seed_override = 0;
  uint64_t shots_override = 0;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run a Bell-state experiment spec and write CSVs");
  simulate->add_option("--spec", spec_path, "experiment spec JSON")
      ->required();
  simulate->add_option("--out-dir", out_dir, "output directory");
  simulate->add_option("--threads", threads, "worker threads (0 = default)");
  simulate->add_option("--seed", seed_override, "override the spec's seed");
  simulate->add_option("--shots", shots_override, "override the spec's shots");

  std::vector<std::string> summaries;
  int resamples = 2000;
  uint64_t seed = 1;
  CLI::App* report = app.add_subcommand(
      "report", "bootstrap postselected fidelities across summary CSVs");
  report->add_option("summaries", summaries, "summary.csv files")->required();
  report->add_option("--out", out_path, "write the aggregated CSV here");
  report->add_option("--resamples", resamples, "bootstrap resamples");
  report->add_option("--seed", seed, "bootstrap seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cli::cmd_classify(code_spec, pauli, std::cout);
    if (*census) return cli::cmd_census(code_spec, group, json_path,
                                        std::cout);
    if (*verify) return cli::cmd_verify_theorem(code_spec, group, json_path,
                                                std::cout);
    if (*synth) return cli::cmd_synth_unencoder(code_spec, out_path,
                                                std::cout);
    if (*recovery) return cli::cmd_recovery_table(code_spec, std::cout);
    if (*sequence) return cli::cmd_sequence(seq_name, gray_zfree,
                                            seq_generators, tau_us, out_path,
                                            std::cout);
    if (*simulate) return cli::cmd_simulate(spec_path, out_dir, threads,
                                            std::cout, seed_override,
                                            shots_override);
    if (*report) return cli::cmd_report(summaries, out_path, resamples, seed,
                                        std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  }
  return cli::kInputError;
}
