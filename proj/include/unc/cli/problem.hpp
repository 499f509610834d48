#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unc/term/signature.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

/// Malformed problem text, located by 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A problem in the Cops TRS format: `(VAR …)`, `(RULES l -> r …)` and an
/// optional `(COMMENT …)`.
struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<RewriteRule> rules;
  std::optional<std::string> comment;
  Signature signature;

  Trs trs() const { return Trs(signature, rules); }

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

ProblemFile parse_cops(std::string_view text);

/// A single term in the same syntax; names listed in `variables` are
/// variables, all other identifiers function symbols.
Term parse_term(std::string_view text, const std::vector<std::string>& variables = {});

/// Cops text that parses back to an equal problem.
std::string print_cops(const ProblemFile& problem);

}  // namespace unc
