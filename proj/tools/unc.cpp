#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "unc/cli/problem.hpp"
#include "unc/cli/prover.hpp"

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitMaybe = 1;
constexpr int kExitInputError = 2;

int prove(const std::string& path, const unc::StrategyConfig& config, bool certificate) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitInputError;
  }
  std::stringstream text;
  text << in.rdbuf();

  unc::ProblemFile problem;
  try {
    problem = unc::parse_cops(text.str());
  } catch (const unc::ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kExitInputError;
  }

  unc::ProofOutcome outcome = unc::prove_unc(problem, config);
  const std::string answer = unc::answer(outcome.verdict);
  std::cout << answer << "\n";
  if (certificate) std::cout << outcome.certificate;
  return answer == "MAYBE" ? kExitMaybe : kExitDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prover for unique normal forms with respect to conversion"};
  app.require_subcommand(1);

  CLI::App* prove_cmd = app.add_subcommand("prove", "Decide UNC of a TRS in Cops format");
  std::string path;
  double timeout = 60;
  std::vector<std::string> methods;
  std::size_t rounds = 3;
  unsigned conversion_depth = unc::Budget{}.conversion_depth;
  std::size_t size_cap = unc::Budget{}.size_cap;
  bool certificate = false;
  prove_cmd->add_option("file", path, "Problem file")->required();
  prove_cmd->add_option("--timeout", timeout, "Time limit in seconds")
      ->check(CLI::PositiveNumber);
  prove_cmd->add_option("--methods", methods, "Comma-separated strategy, e.g. rr,cp,rev+sc/3")
      ->delimiter(',');
  prove_cmd->add_option("--rounds", rounds, "Default completion rounds")->check(CLI::PositiveNumber);
  prove_cmd->add_option("--budget-conv", conversion_depth, "Conversion search depth");
  prove_cmd->add_option("--budget-size", size_cap, "Term size cap for searches");
  prove_cmd->add_flag("--certificate", certificate, "Print the justification after the answer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInputError;
  }

  unc::StrategyConfig config;
  config.timeout_seconds = timeout;
  config.rounds = rounds;
  config.budget.conversion_depth = conversion_depth;
  config.budget.size_cap = size_cap;
  if (!methods.empty()) {
    config.methods.clear();
    try {
      for (const std::string& m : methods) config.methods.push_back(unc::parse_method(m));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  return prove(path, config, certificate);
}
