#include "unc/trs/critical_pairs.hpp"

#include <algorithm>
#include <set>

#include "unc/term/substitution.hpp"
#include "unc/term/unify.hpp"

namespace unc {

std::string to_string(OverlapKind kind) {
  return kind == OverlapKind::Overlay ? "overlay" : "inner-outer";
}

std::string to_string(const CriticalPair& cp) {
  return "<" + to_string(cp.left) + ", " + to_string(cp.right) + "> (" + to_string(cp.kind) +
         ", rule " + std::to_string(cp.inner + 1) + " into rule " + std::to_string(cp.outer + 1) +
         " at " + to_string(cp.position) + ")";
}

std::vector<CriticalPair> critical_pairs(const Trs& trs) {
  std::vector<CriticalPair> out;
  std::set<std::pair<std::vector<Term>, OverlapKind>> seen;
  unsigned floor = trs.max_variable_index();
  for (std::size_t outer = 0; outer < trs.size(); ++outer) {
    const RewriteRule& r2 = trs[outer];
    for (std::size_t inner = 0; inner < trs.size(); ++inner) {
      const Term pair[] = {trs[inner].lhs, trs[inner].rhs};
      Substitution rename = renaming_above(pair, floor);
      Term l1 = rename.apply(trs[inner].lhs);
      Term r1 = rename.apply(trs[inner].rhs);
      for (const Position& p : function_positions(r2.lhs)) {
        if (p.is_root() && inner == outer) continue;
        auto sigma = mgu(l1, subterm_at(r2.lhs, p));
        if (!sigma) continue;
        CriticalPair cp{sigma->apply(replace_at(r2.lhs, p, r1)),
                        sigma->apply(r2.rhs),
                        p.is_root() ? OverlapKind::Overlay : OverlapKind::InnerOuter,
                        outer,
                        inner,
                        p,
                        sigma->apply(r2.lhs)};
        const Term key_terms[] = {cp.left, cp.right};
        if (!seen.emplace(canonical_variant(key_terms), cp.kind).second) continue;
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

bool is_overlapping(const Trs& trs) { return !critical_pairs(trs).empty(); }

}  // namespace unc
