#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qldd/experiment.hpp"
#include "qldd/ldd.hpp"

namespace qldd::cli {

// Exit codes shared by every subcommand: 0 success/pass, 1 verification
// failure, 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInputError = 2;

struct GroupChoice {
  std::string spec = "canonical";  // canonical | z-free | generators=A,B,...
};

int cmd_classify(const std::string& code_spec, const std::string& pauli,
                 std::ostream& out);

int cmd_census(const std::string& code_spec, const GroupChoice& group,
               const std::string& json_path, std::ostream& out);

int cmd_verify_theorem(const std::string& code_spec, const GroupChoice& group,
                       const std::string& json_path, std::ostream& out);

int cmd_synth_unencoder(const std::string& code_spec,
                        const std::string& out_path, std::ostream& out);

int cmd_recovery_table(const std::string& code_spec, std::ostream& out);

int cmd_sequence(const std::string& name, bool gray_zfree,
                 const std::string& generators, double tau_us,
                 const std::string& out_path, std::ostream& out);

// Loads a JSON experiment spec (see README for the schema).
ExperimentSpec load_experiment_spec(const std::string& path);
ExperimentSpec parse_experiment_spec(const std::string& json_text);

// seed_override / shots_override of 0 keep the spec file's values.
int cmd_simulate(const std::string& spec_path, const std::string& out_dir,
                 int threads, std::ostream& out, uint64_t seed_override = 0,
                 uint64_t shots_override = 0);

int cmd_report(const std::vector<std::string>& summary_paths,
               const std::string& out_path, int resamples, uint64_t seed,
               std::ostream& out);

// Resolves a --group flag against a code.
DecouplingGroup resolve_group(const StabilizerCode& code,
                              const GroupChoice& choice);

// Recovery table appropriate for the group choice: canonical and custom
// generators use the code's own unencoder; z-free uses the z-free logical
// variant of the four-qubit code.
RecoveryTable recovery_for_group(const StabilizerCode& code,
                                 const GroupChoice& choice);

}  // namespace qldd::cli
