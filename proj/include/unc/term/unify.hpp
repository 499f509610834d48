#pragma once

#include <optional>

#include "unc/term/substitution.hpp"
#include "unc/term/term.hpp"

namespace unc {

/// Finds σ with pattern·σ = subject. The domain of σ is limited to the
/// variables of `pattern`.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

/// Most general unifier with occurs check. The result is idempotent.
/// Variables of `s` and `t` are not renamed apart.
std::optional<Substitution> mgu(const Term& s, const Term& t);

/// Whether `s` and `t` have a unifier over rational (infinite) trees, i.e.
/// unification without the occurs check.
bool unifiable_rational(const Term& s, const Term& t);

}  // namespace unc
