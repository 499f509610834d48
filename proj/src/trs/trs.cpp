#include "unc/trs/trs.hpp"

#include <algorithm>

#include "unc/term/substitution.hpp"

namespace unc {

bool is_rewrite_rule(const Term& lhs, const Term& rhs) {
  return !lhs.is_variable() && variables_subset(rhs, lhs);
}

RewriteRule::RewriteRule(Term l, Term r) : lhs(std::move(l)), rhs(std::move(r)) {
  if (lhs.is_variable())
    throw RuleError("ill-formed rule " + unc::to_string(lhs) + " -> " + unc::to_string(rhs) +
                    ": left-hand side is a variable");
  if (!variables_subset(rhs, lhs))
    throw RuleError("ill-formed rule " + unc::to_string(lhs) + " -> " + unc::to_string(rhs) +
                    ": right-hand side has variables not in the left-hand side");
}

bool RewriteRule::non_duplicating() const {
  for (const Variable& v : variables(rhs))
    if (occurrences(rhs, v) > occurrences(lhs, v)) return false;
  return true;
}

std::string to_string(const RewriteRule& rule) {
  return to_string(rule.lhs) + " -> " + to_string(rule.rhs);
}

bool is_variant(const RewriteRule& a, const RewriteRule& b) {
  Term x[] = {a.lhs, a.rhs};
  Term y[] = {b.lhs, b.rhs};
  return is_variant(std::span<const Term>(x), std::span<const Term>(y));
}

namespace {

void push_unique(std::vector<RewriteRule>& out, const RewriteRule& r) {
  for (const RewriteRule& existing : out)
    if (is_variant(existing, r)) return;
  out.push_back(r);
}

}  // namespace

Trs::Trs(std::vector<RewriteRule> rules) {
  for (const RewriteRule& r : rules) {
    signature_.absorb(r.lhs);
    signature_.absorb(r.rhs);
    push_unique(rules_, r);
  }
}

Trs::Trs(Signature signature, std::vector<RewriteRule> rules) : signature_(std::move(signature)) {
  for (const RewriteRule& r : rules) {
    if (!signature_.admits(r.lhs) || !signature_.admits(r.rhs))
      throw SignatureError("rule " + to_string(r) + " is not well formed over the signature");
    push_unique(rules_, r);
  }
}

bool Trs::left_linear() const {
  return std::all_of(rules_.begin(), rules_.end(), [](auto& r) { return r.left_linear(); });
}
bool Trs::right_linear() const {
  return std::all_of(rules_.begin(), rules_.end(), [](auto& r) { return r.right_linear(); });
}
bool Trs::linear() const { return left_linear() && right_linear(); }
bool Trs::non_duplicating() const {
  return std::all_of(rules_.begin(), rules_.end(), [](auto& r) { return r.non_duplicating(); });
}

unsigned Trs::max_variable_index() const {
  unsigned m = 0;
  for (const RewriteRule& r : rules_)
    m = std::max({m, unc::max_variable_index(r.lhs), unc::max_variable_index(r.rhs)});
  return m;
}

Trs Trs::extended(const std::vector<RewriteRule>& extra) const {
  Trs out = *this;
  for (const RewriteRule& r : extra) {
    out.signature_.absorb(r.lhs);
    out.signature_.absorb(r.rhs);
    push_unique(out.rules_, r);
  }
  return out;
}

std::string to_string(const Trs& trs) {
  std::string out;
  for (const RewriteRule& r : trs.rules()) out += to_string(r) + "\n";
  return out;
}

}  // namespace unc
