#include "unc/criteria/basic.hpp"

#include "unc/ctrs/ctrs.hpp"
#include "unc/criteria/report.hpp"
#include "unc/term/substitution.hpp"
#include "unc/term/unify.hpp"
#include "unc/trs/rewrite.hpp"

namespace unc {

std::string to_string(const CriterionReport& report) {
  std::string out = report.criterion + (report.holds ? ": holds" : ": fails");
  if (!report.failure.empty()) out += " (" + report.failure + ")";
  if (report.truncated) out += " [search truncated]";
  for (const PairClosure& c : report.closures) out += "\n  " + c.pair + ": " + c.justification;
  return out;
}

bool strongly_non_overlapping(const Trs& trs) {
  return conditional_critical_pairs(conditional_linearize(trs)).empty();
}

bool non_omega_overlapping(const Trs& trs) {
  unsigned floor = trs.max_variable_index();
  for (std::size_t outer = 0; outer < trs.size(); ++outer) {
    const Term& l2 = trs[outer].lhs;
    for (std::size_t inner = 0; inner < trs.size(); ++inner) {
      const Term pair[] = {trs[inner].lhs, trs[inner].rhs};
      Term l1 = renaming_above(pair, floor).apply(trs[inner].lhs);
      for (const Position& p : function_positions(l2)) {
        if (p.is_root() && inner == outer) continue;
        if (unifiable_rational(l1, subterm_at(l2, p))) return false;
      }
    }
  }
  return true;
}

bool right_reducible(const Trs& trs) {
  for (const RewriteRule& r : trs.rules())
    if (is_normal_form(trs, r.rhs)) return false;
  return true;
}

}  // namespace unc
