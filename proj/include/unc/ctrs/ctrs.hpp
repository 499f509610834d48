#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unc/term/signature.hpp"
#include "unc/term/substitution.hpp"
#include "unc/term/term.hpp"
#include "unc/trs/critical_pairs.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

struct Equation {
  Term lhs;
  Term rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
  friend auto operator<=>(const Equation&, const Equation&) = default;
};

std::string to_string(const Equation& e);
std::string to_string(const std::vector<Equation>& gamma);
Equation apply(const Substitution& sigma, const Equation& e);

/// l → r ⇐ s1 ≈ t1, …, sk ≈ tk, read semi-equationally.
struct ConditionalRule {
  /// Throws RuleError when `lhs` is a variable.
  ConditionalRule(Term lhs, Term rhs, std::vector<Equation> conditions = {});

  Term lhs;
  Term rhs;
  std::vector<Equation> conditions;

  /// V(c) ∪ V(r) ⊆ V(l).
  bool type1() const;
  bool left_linear() const { return is_linear(lhs); }
  bool linear() const { return is_linear(lhs) && is_linear(rhs); }
  /// l linear and not a variable, conditions x_i ≈ y_i with V(l) = {x_i}
  /// pairwise distinct, V(r) ⊆ {y_i} and {x_i} ∩ {y_i} = ∅.
  bool lr_separated() const;
  /// |r|_y ≤ |y_1,…,y_n|_y for every variable y of r.
  bool non_duplicating() const;

  /// ⟨s1,…,sk⟩ and ⟨t1,…,tk⟩.
  Term condition_lhs_tuple() const;
  Term condition_rhs_tuple() const;

  unsigned max_variable_index() const;
};

std::string to_string(const ConditionalRule& rule);

class Ctrs {
 public:
  Ctrs() = default;
  explicit Ctrs(std::vector<ConditionalRule> rules);
  Ctrs(Signature signature, std::vector<ConditionalRule> rules);

  const Signature& signature() const { return signature_; }
  const std::vector<ConditionalRule>& rules() const { return rules_; }
  const ConditionalRule& operator[](std::size_t i) const { return rules_[i]; }
  std::size_t size() const { return rules_.size(); }

  bool left_linear() const;
  bool linear() const;
  bool type1() const;
  bool lr_separated() const;
  bool non_duplicating() const;
  bool unconditional() const;
  unsigned max_variable_index() const;

 private:
  Signature signature_;
  std::vector<ConditionalRule> rules_;
};

std::string to_string(const Ctrs& ctrs);

/// The TRS read as a CTRS with empty conditions.
Ctrs as_ctrs(const Trs& trs);

/// Left-linear, type 1 conditional linearization. Each extra occurrence of a
/// non-linear variable x is renamed to a fresh x_i; the occurrences of x are
/// chained by x_1 ≈ x_2, x_2 ≈ x_3, …; the right-hand side uses the first
/// occurrence. Left-linear rules are kept with empty conditions.
Ctrs conditional_linearize(const Trs& trs);

/// LR-separated linearization: every variable occurrence of the lhs becomes a
/// fresh x_i with condition x_i ≈ (original variable).
Ctrs lr_separated_linearize(const Trs& trs);

/// Γ1σ, Γ2σ ⇒ ⟨l2[r1]_p σ, r2 σ⟩ with the inner rule's conditions first.
struct ConditionalCriticalPair {
  std::vector<Equation> gamma;
  Term left;
  Term right;
  OverlapKind kind = OverlapKind::Overlay;
  std::size_t outer = 0;
  std::size_t inner = 0;
  Position position;
  Term peak;
};

std::string to_string(const ConditionalCriticalPair& ccp);

/// Conditional critical pairs over renamed-apart rule pairs; pairs equal up
/// to renaming (including Γ as a sequence) are reported once.
std::vector<ConditionalCriticalPair> conditional_critical_pairs(const Ctrs& ctrs);

}  // namespace unc
