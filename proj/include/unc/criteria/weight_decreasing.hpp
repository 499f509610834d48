#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "unc/ctrs/ctrs.hpp"
#include "unc/criteria/report.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

/// A remaining multiset of assumptions Σ (kept in the order of the
/// originating Γ) together with a term or term tuple.
struct SimState {
  std::vector<Equation> remaining;
  Term term;

  friend bool operator==(const SimState&, const SimState&) = default;
  friend auto operator<=>(const SimState&, const SimState&) = default;
};

std::string to_string(const SimState& state);

/// Each result set below records the assumptions left over after a derivation
/// that uses exactly the consumed part of Γ. Equal equations of Γ are
/// interchangeable, so remainders are reported once per multiset.

/// ⟨Σ,t⟩ with Γ∖Σ ⊩ s ∼₀ t. Tuples (make_tuple) split Γ across components.
std::set<SimState> sim0(std::span<const Equation> gamma, const Term& s, const Budget& budget = {});

/// Σ with Γ∖Σ ⊩ s →₁ t under the rules of `ctrs`.
std::set<std::vector<Equation>> red1(const Ctrs& ctrs, std::span<const Equation> gamma,
                                     const Term& s, const Term& t, const Budget& budget = {});
/// ⟨Σ,t⟩ with Γ∖Σ ⊩ s →₁ t.
std::set<SimState> red1_reducts(const Ctrs& ctrs, std::span<const Equation> gamma, const Term& s,
                                const Budget& budget = {});
/// Σ with Γ∖Σ ⊩ s ∼₀ ∘ →₁ ∘ ∼₀ t.
std::set<std::vector<Equation>> srs010(const Ctrs& ctrs, std::span<const Equation> gamma,
                                       const Term& s, const Term& t, const Budget& budget = {});
/// Σ with Γ∖Σ ⊩ s ∼₁ t.
std::set<std::vector<Equation>> sim1(const Ctrs& ctrs, std::span<const Equation> gamma,
                                     const Term& s, const Term& t, const Budget& budget = {});
/// Σ with Γ∖Σ ⊩ s →₂ t. Condition variables left open by the step are drawn
/// from the ∼₀-closure of the matching condition side.
std::set<std::vector<Equation>> red2(const Ctrs& ctrs, std::span<const Equation> gamma,
                                     const Term& s, const Term& t, const Budget& budget = {});

struct WdVerdict {
  bool holds = false;
  /// Which condition closed the pair.
  std::string how;
  bool truncated = false;
};

/// Whether Γ ⇒ ⟨s,t⟩ satisfies (i) s ∼≤₁ t, (ii) s ↔₂ t, or (iii)
/// s →ᵢ∘∼ⱼ t and t →ᵢ'∘∼ⱼ' s with i+j ≤ 2 and i'+j' ≤ 2.
WdVerdict wd_ccp_satisfied(const Ctrs& ctrs, std::span<const Equation> gamma, const Term& s,
                           const Term& t, const Budget& budget = {});

/// UNC of a non-duplicating TRS through weight-decreasing joinability of the
/// critical pairs of its LR-separated linearization.
CriterionReport weight_decreasing_unc(const Trs& trs, const Budget& budget = {});

}  // namespace unc
