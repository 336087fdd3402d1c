#pragma once

// Config-driven driver: run a sweep from a JSON config and persist a
// RunRecord; analyze an exported MPS or a record.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "tnvqa/oracle.hpp"
#include "tnvqa/tensor.hpp"
#include "tnvqa/vqa.hpp"

namespace tnvqa {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitIo = 3,
  kExitNumerical = 4,
};

/// Maps the current exception to an exit code and writes a one-line message.
int report_exception(std::ostream& err);

struct PlantedSpec {
  int k = 1;
  std::uint64_t seed = 0;
  std::uint64_t phases_seed = 0;
};

struct OracleSpec {
  std::string type;  // dimacs | hamiltonian | dense | planted
  std::string path;
  std::string preset;  // tfim | sat
  std::optional<double> t;
  nlohmann::json params = nlohmann::json::object();
  PlantedSpec planted;
};

struct RunConfig {
  int n = 0;
  int k_max = 0;
  OracleSpec oracle;
  std::optional<Method> method;  // unset: default_method for the k_max ansatz
  int max_iters = 500;
  double tol_loss = 1e-12;
  double fd_step = 1e-5;
  int restarts = 1;
  std::uint64_t shots = 0;
  bool warm_start = true;
  double cert_tol = 1e-6;
  std::uint64_t seed = 0;
  std::string output_path = "run_record.json";

  /// Field ranges only; oracle files are checked when the oracle is built.
  void validate() const;
  SweepConfig sweep_config() const;
};

/// Strict: unknown keys and wrong types raise ValidationError naming the key.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);
nlohmann::json to_json(const RunConfig& config);

/// Relative paths in the oracle spec resolve against base_dir when non-empty.
BlackBoxUnitary build_oracle(const RunConfig& config, const std::string& base_dir = "");

/// Planted state of a "planted" config, for checking recovered states.
VectorXc planted_state(const RunConfig& config);

nlohmann::json mps_to_json(const MpsState& mps);
MpsState mps_from_json(const nlohmann::json& j);

/// Pretty JSON with every floating-point value written to 17 significant digits.
std::string dump_json(const nlohmann::json& j);

/// Writes to a temporary sibling file, then renames over path.
void write_file_atomic(const std::string& path, const std::string& contents);

nlohmann::json read_json_file(const std::string& path);

/// Runs the sweep, builds the record and writes it to config.output_path.
nlohmann::json main_run(const RunConfig& config, const std::string& base_dir = "");

/// Spectra, ranks, ebits and a truncation table for an MPS given either as
/// an exported MPS object or a RunRecord containing one.
nlohmann::json analyze(const nlohmann::json& input);
nlohmann::json main_analyze(const std::string& path);
void print_analysis(std::ostream& out, const nlohmann::json& report);

}  // namespace tnvqa
