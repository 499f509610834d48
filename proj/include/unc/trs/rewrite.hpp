#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "unc/term/term.hpp"
#include "unc/trs/trace.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

struct RewriteStep {
  Position position;
  std::size_t rule = 0;
  Term result;
};

/// All one-step reducts, ordered by position (preorder) and then rule index.
std::vector<RewriteStep> rewrite_steps(const Trs& trs, const Term& t);

/// Every reduct t' with t ← t': expansions of a rule instance at some
/// position. Left-hand-side variables missing from the right-hand side are
/// instantiated with variables fresh for `t`.
std::vector<RewriteStep> backward_steps(const Trs& trs, const Term& t);

bool is_normal_form(const Trs& trs, const Term& t);
/// The first redex found, if any.
std::optional<RewriteStep> first_redex(const Trs& trs, const Term& t);

/// Terms reachable by contracting a set of pairwise parallel redexes
/// (including the empty set).
std::set<Term> parallel_step_reducts(const Trs& trs, const Term& t);

struct DevelopmentReducts {
  /// Reducts with one witnessing forward trace each.
  std::map<Term, Trace> reducts;
  bool truncated = false;

  bool contains(const Term& t) const { return reducts.count(t) > 0; }
  std::set<Term> terms() const;
};

/// Reducts of at most `iterations` consecutive multisteps ○→. For
/// non-left-linear rules a multistep contracts lσ to rτ only when every
/// occurrence of a variable x develops to the same τ(x).
DevelopmentReducts development_step_reducts(const Trs& trs, const Term& t, unsigned iterations,
                                            const Budget& budget = {});

/// Breadth-first exploration of → (or ↔ when `conversions`) from a start
/// term, bounded by depth, term size and state count.
class Exploration {
 public:
  Exploration(const Trs& trs, const Term& start, unsigned depth, const Budget& budget,
              bool conversions);

  /// Visited terms in breadth-first order; the start term comes first.
  const std::vector<Term>& terms() const { return order_; }
  bool contains(const Term& t) const { return index_.count(t) > 0; }
  bool truncated() const { return truncated_; }
  /// Shortest recorded trace from the start term to `t`, which must be
  /// contained.
  Trace trace_to(const Term& t) const;
  unsigned distance(const Term& t) const;

 private:
  struct Parent {
    std::size_t from;
    TraceStep step;
  };
  std::vector<Term> order_;
  std::vector<std::optional<Parent>> parents_;
  std::vector<unsigned> depth_;
  std::unordered_map<Term, std::size_t> index_;
  bool truncated_ = false;
};

/// Terms reachable from s in at most `depth` → steps.
std::set<Term> bounded_reducts(const Trs& trs, const Term& s, unsigned depth,
                               const Budget& budget = {});

/// Terms reachable from s in at most `depth` ↔ steps whose intermediate
/// terms respect the size cap.
std::set<Term> bounded_conversions(const Trs& trs, const Term& s, unsigned depth,
                                   std::size_t size_cap);

}  // namespace unc
