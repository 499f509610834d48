#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unc/cli/problem.hpp"
#include "unc/completion/completion.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

/// One entry of a strategy: a method tag, optionally applied to the
/// rule-reversed system and, for completions, with its own round limit.
struct MethodSpec {
  std::string name;
  bool reversed = false;
  std::size_t rounds = 0;  // 0: use the configured default
};

/// Parses `rev+sc/3`-style tags. Throws std::invalid_argument on an unknown
/// method.
MethodSpec parse_method(std::string_view tag);
std::string to_string(const MethodSpec& method);

struct StrategyConfig {
  std::vector<MethodSpec> methods = default_methods();
  std::size_t rounds = 3;
  Budget budget;
  double timeout_seconds = 60;

  static std::vector<MethodSpec> default_methods();
};

struct ProofOutcome {
  Verdict verdict;
  /// Plain-text justification: method, added rules, closing steps or the
  /// counterexample conversion.
  std::string certificate;
};

/// "YES", "NO" or "MAYBE".
std::string answer(const Verdict& verdict);

/// Runs the strategy on every direct-sum component of the problem.
ProofOutcome prove_unc(const ProblemFile& problem, const StrategyConfig& config);
ProofOutcome prove_unc(const Trs& trs, const StrategyConfig& config);

}  // namespace unc
