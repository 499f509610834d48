#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unc/trs/critical_pairs.hpp"
#include "unc/trs/trace.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

/// A guard φ over systems and a closure test Φ over critical pairs such that
/// φ(S) and Φ on every critical pair of S imply confluence of S.
struct ConfluencePredicate {
  std::string name;
  std::function<bool(const Trs&)> guard;
  /// A description of the closing steps when the pair is closed. Sets the
  /// flag when a search was cut short.
  std::function<std::optional<std::string>(const Trs&, const CriticalPair&, const Budget&, bool*)>
      closes;
};

/// φ = linear, Φ(u,v) = u →* ∘ =← v ∧ u →= ∘ *← v.
ConfluencePredicate strongly_closed_predicate();
/// φ = left-linear, Φ = u ○→ v for inner-outer pairs, u ○→ ∘ *← v for
/// overlays.
ConfluencePredicate development_closed_predicate();

/// Two distinct normal forms of the original system and a conversion between
/// them over that system.
struct Counterexample {
  Term left;
  Term right;
  Trace conversion;
  /// How the witness was found.
  std::string route;
};

/// Whether both terms are distinct normal forms of `trs` and the conversion
/// replays over `trs` from `left` to `right`.
bool validate_counterexample(const Trs& trs, const Counterexample& cex);

struct AddedRule {
  RewriteRule rule;
  /// lhs ↔* rhs over the original system.
  Trace conversion;
  std::size_t round = 0;
};

struct UncProof {
  std::string method;
  /// Closing steps or other justification lines.
  std::vector<std::string> details;
  std::vector<AddedRule> added;
};

struct NotUncProof {
  std::string method;
  Counterexample witness;
  std::vector<AddedRule> added;
};

struct Undecided {
  std::string reason;
};

using Verdict = std::variant<UncProof, NotUncProof, Undecided>;

struct CompletionResult {
  Verdict verdict;
  /// The system at the last round.
  Trs system;
  /// Number of rounds started (Step 1 executions).
  std::size_t rounds = 0;
};

/// The UNC completion procedure. Rules are added only when lhs ↔* rhs and
/// the lhs is reducible, so UNC is preserved; witnesses and added-rule
/// conversions are expressed over the input system.
CompletionResult unc_complete(const Trs& trs, const ConfluencePredicate& predicate,
                              std::size_t max_rounds = 3, const Budget& budget = {});

/// Where a rule of a reversed system comes from.
struct RuleOrigin {
  std::size_t original = 0;
  /// r → l for an original l → r.
  bool reversed = false;
  /// l → l for an original l → r.
  bool identity = false;
};

struct Reversal {
  Trs system;
  std::vector<RuleOrigin> origin;
};

/// Rule reversing to a fixpoint: l → r becomes l → l and r → l when r is
/// reducible, r → l is a rewrite rule and |l| < |r|; l → l is dropped when l
/// is reducible by the remaining rules.
Reversal reverse_rules(const Trs& trs);
Trs rule_reverse(const Trs& trs);

/// A conversion over `reversal.system` as a conversion over the original.
Trace restore_trace(const Reversal& reversal, const Trace& trace);

/// Bounded search for two distinct convertible normal forms, seeded from
/// critical pair sides and right-hand sides. A normal form t convertible to
/// some s with V(t) ⊄ V(s) yields t and a renamed copy of t.
std::optional<Counterexample> disprove_search(const Trs& trs, unsigned depth,
                                              std::size_t size_cap, const Budget& budget = {});

/// A component of a direct-sum decomposition with the indices of its rules
/// in the input system.
struct Component {
  Trs system;
  std::vector<std::size_t> rules;
};

/// The finest partition of the rules into systems over pairwise disjoint
/// function symbols, in order of first rule.
std::vector<Component> direct_sum_decompose(const Trs& trs);

/// Rule indices of a component trace renamed to the full system.
Trace lift_trace(const Component& component, const Trace& trace);

/// u ← peak → v for a critical pair.
Trace critical_pair_trace(const CriticalPair& cp);

}  // namespace unc
