#pragma once

#include <optional>
#include <string>

#include "unc/ctrs/ctrs.hpp"
#include "unc/criteria/report.hpp"
#include "unc/trs/critical_pairs.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

/// Conditional parallel-closedness of a left-linear type 1 CTRS. Rule
/// conditions are discharged by congruence closure over the pair's Γ.
/// Inner-outer pairs need u ⇉ v; overlays need u ⇉ ∘ *← v with the *← side
/// bounded by budget.conversion_depth.
CriterionReport parallel_closed_check(const Ctrs& ctrs, const Budget& budget = {});

/// Conditional strong closedness of a linear CTRS: every pair needs
/// u →* ∘ =← v and u →= ∘ *← v under the same entailment regime.
CriterionReport strongly_closed_check(const Ctrs& ctrs, const Budget& budget = {});

/// The unconditional counterparts over a TRS.
CriterionReport parallel_closed(const Trs& trs, const Budget& budget = {});
CriterionReport strongly_closed(const Trs& trs, const Budget& budget = {});
/// Almost development closedness: inner-outer pairs need u ○→ v, overlays
/// u ○→ ∘ *← v.
CriterionReport development_closed(const Trs& trs, const Budget& budget = {});

/// Closure of a single critical pair of `trs`; a description of the closing
/// steps when closed.
std::optional<std::string> strongly_joinable(const Trs& trs, const Term& u, const Term& v,
                                             const Budget& budget, bool* truncated = nullptr);
std::optional<std::string> development_joinable(const Trs& trs, const CriticalPair& cp,
                                                const Budget& budget, bool* truncated = nullptr);

}  // namespace unc
