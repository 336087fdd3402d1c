#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tnvqa/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Variational search for low-entanglement eigenvectors of a black-box unitary"};
  app.set_version_flag("--version", tnvqa::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  std::optional<std::uint64_t> shots;
  CLI::App* run = app.add_subcommand("run", "Run the rank sweep described by a JSON config");
  run->add_option("config", config_path, "RunConfig JSON file")->required();
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--output", output, "Override output_path");
  run->add_option("--shots", shots, "Override shots (0 = exact probabilities)");

  std::string analyze_path;
  CLI::App* analyze = app.add_subcommand("analyze", "Entanglement audit of an exported MPS or a RunRecord");
  analyze->add_option("path", analyze_path, "MPS JSON or RunRecord JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? tnvqa::kExitOk : tnvqa::kExitUsage;
  }

  try {
    if (run->parsed()) {
      nlohmann::json j = tnvqa::read_json_file(config_path);
      if (j.is_object()) {
        if (seed) j["seed"] = *seed;
        if (output) j["output_path"] = *output;
        if (shots) j["shots"] = *shots;
      }
      const tnvqa::RunConfig config = tnvqa::parse_run_config(j);
      const std::string base_dir = std::filesystem::path(config_path).parent_path().string();
      const nlohmann::json record = tnvqa::main_run(config, base_dir);
      const auto& best = record.at("best");
      std::cout << "best k = " << best.at("k").get<int>() << ", certificate = " << best.at("certificate").get<double>()
                << ", loss = " << best.at("loss").get<double>() << "\n"
                << record.at("reason").get<std::string>() << "\n"
                << "record written to " << config.output_path << "\n";
    } else {
      tnvqa::print_analysis(std::cout, tnvqa::main_analyze(analyze_path));
    }
  } catch (...) {
    return tnvqa::report_exception(std::cerr);
  }
  return tnvqa::kExitOk;
}
