#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "unc/term/signature.hpp"
#include "unc/term/term.hpp"

namespace unc {

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Whether l → r is a rewrite rule: l is not a variable and V(r) ⊆ V(l).
bool is_rewrite_rule(const Term& lhs, const Term& rhs);

struct RewriteRule {
  /// Throws RuleError when the pair is not a rewrite rule.
  RewriteRule(Term lhs, Term rhs);

  Term lhs;
  Term rhs;

  bool left_linear() const { return is_linear(lhs); }
  bool right_linear() const { return is_linear(rhs); }
  bool linear() const { return left_linear() && right_linear(); }
  /// |l|_x ≥ |r|_x for every variable x.
  bool non_duplicating() const;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

std::string to_string(const RewriteRule& rule);
/// Equality of rules up to variable renaming.
bool is_variant(const RewriteRule& a, const RewriteRule& b);

/// A finite rule set over a signature. Rules that are variants of an earlier
/// rule are dropped on construction; order is otherwise preserved.
class Trs {
 public:
  Trs() = default;
  /// Infers the signature from the rules.
  explicit Trs(std::vector<RewriteRule> rules);
  /// Throws SignatureError if a rule is not well formed over `signature`.
  Trs(Signature signature, std::vector<RewriteRule> rules);

  const Signature& signature() const { return signature_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const RewriteRule& operator[](std::size_t i) const { return rules_[i]; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  bool left_linear() const;
  bool right_linear() const;
  bool linear() const;
  bool non_duplicating() const;

  /// Largest variable index used by any rule.
  unsigned max_variable_index() const;

  /// This system extended by `extra` (duplicates dropped); the signature is
  /// widened to cover the new rules.
  Trs extended(const std::vector<RewriteRule>& extra) const;

 private:
  Signature signature_;
  std::vector<RewriteRule> rules_;
};

std::string to_string(const Trs& trs);

/// Search bounds shared by the budgeted procedures, plus a cooperative
/// deadline.
struct Budget {
  unsigned conversion_depth = 5;
  unsigned development_cap = 3;
  std::size_t size_cap = 40;
  /// Upper bound on the number of terms a single search may visit.
  std::size_t state_cap = 20000;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();

  bool expired() const { return std::chrono::steady_clock::now() >= deadline; }
};

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("timeout") {}
};

}  // namespace unc
