#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unc/term/term.hpp"
#include "unc/trs/trs.hpp"

namespace unc {

enum class OverlapKind { Overlay, InnerOuter };

std::string to_string(OverlapKind kind);

/// ⟨l2[r1]_p σ, r2 σ⟩ for an overlap of the inner rule l1 → r1 at position p
/// of the outer rule l2 → r2, with σ = mgu(l1, l2|_p).
struct CriticalPair {
  Term left;
  Term right;
  OverlapKind kind = OverlapKind::Overlay;
  std::size_t outer = 0;
  std::size_t inner = 0;
  Position position;
  /// The overlapped term l2 σ.
  Term peak;
};

std::string to_string(const CriticalPair& cp);

/// Critical pairs of all ordered rule pairs, including a rule against a
/// renamed copy of itself below the root. Pairs equal up to renaming are
/// reported once. The outer rule keeps its variables; the inner rule is
/// renamed apart with fresh indices.
std::vector<CriticalPair> critical_pairs(const Trs& trs);

/// Whether some non-variable subterm of an outer lhs unifies with another
/// (or, below the root, the same) lhs, i.e. critical_pairs is non-empty.
bool is_overlapping(const Trs& trs);

}  // namespace unc
