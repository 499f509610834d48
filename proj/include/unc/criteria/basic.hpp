#pragma once

#include "unc/trs/trs.hpp"

namespace unc {

/// CCP(R^L) = ∅.
bool strongly_non_overlapping(const Trs& trs);

/// No renamed-apart pair of left-hand sides unifies over rational trees at a
/// non-variable position (excluding a rule against itself at the root).
bool non_omega_overlapping(const Trs& trs);

/// Every right-hand side is reducible.
bool right_reducible(const Trs& trs);

}  // namespace unc
