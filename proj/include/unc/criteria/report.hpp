#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace unc {

/// How one critical pair was closed.
struct PairClosure {
  std::string pair;
  std::string justification;
  /// Rule indices (0-based) used by the closing steps.
  std::vector<std::size_t> rules;
};

struct CriterionReport {
  std::string criterion;
  bool holds = false;
  std::vector<PairClosure> closures;
  /// The first pair that could not be closed, or the reason the criterion
  /// does not apply.
  std::string failure;
  /// Some search hit a budget; a negative answer may be due to the bound.
  bool truncated = false;
};

std::string to_string(const CriterionReport& report);

}  // namespace unc
