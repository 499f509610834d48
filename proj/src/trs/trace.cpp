#include "unc/trs/trace.hpp"

#include <algorithm>
#include <stdexcept>

#include "unc/term/unify.hpp"

namespace unc {

bool Trace::forward_only() const {
  return std::all_of(steps_.begin(), steps_.end(), [](const TraceStep& s) { return s.forward; });
}

void Trace::append(const Trace& rest) {
  if (!(rest.start() == end())) throw std::logic_error("trace append: endpoints differ");
  steps_.insert(steps_.end(), rest.steps_.begin(), rest.steps_.end());
}

Trace Trace::reversed() const {
  Trace out(end());
  for (std::size_t i = steps_.size(); i-- > 0;) {
    const Term& before = i == 0 ? start_ : steps_[i - 1].result;
    out.push({steps_[i].position, steps_[i].rule, !steps_[i].forward, before});
  }
  return out;
}

Trace Trace::instantiated(const Substitution& sigma) const {
  Trace out(sigma.apply(start_));
  for (const TraceStep& s : steps_)
    out.push({s.position, s.rule, s.forward, sigma.apply(s.result)});
  return out;
}

Trace Trace::embedded(const Term& context, const Position& at) const {
  Trace out(replace_at(context, at, start_));
  for (const TraceStep& s : steps_)
    out.push({at.concat(s.position), s.rule, s.forward, replace_at(context, at, s.result)});
  return out;
}

namespace {

/// Whether `to` results from `from` by contracting a redex of `rule` at `p`.
bool valid_forward(const RewriteRule& rule, const Term& from, const Term& to, const Position& p) {
  if (!is_valid_position(from, p) || !is_valid_position(to, p)) return false;
  auto sigma = match(rule.lhs, subterm_at(from, p));
  if (!sigma) return false;
  return replace_at(from, p, sigma->apply(rule.rhs)) == to;
}

}  // namespace

bool replay(const Trs& trs, const Trace& trace) {
  Term cur = trace.start();
  for (const TraceStep& s : trace.steps()) {
    if (s.rule >= trs.size()) return false;
    const RewriteRule& rule = trs[s.rule];
    bool ok = s.forward ? valid_forward(rule, cur, s.result, s.position)
                        : valid_forward(rule, s.result, cur, s.position);
    if (!ok) return false;
    cur = s.result;
  }
  return true;
}

Trace expand_trace(const Trace& trace, std::size_t base_size, const std::vector<Trace>& added) {
  Trace out(trace.start());
  Term cur = trace.start();
  for (const TraceStep& s : trace.steps()) {
    if (s.rule < base_size) {
      out.push(s);
    } else {
      const Trace& def = added.at(s.rule - base_size);
      // The redex side is `cur` for a forward step and `s.result` otherwise.
      const Term& redex_side = s.forward ? cur : s.result;
      auto sigma = match(def.start(), subterm_at(redex_side, s.position));
      if (!sigma) throw std::logic_error("expand_trace: added rule does not match its step");
      Trace piece = def.instantiated(*sigma);
      if (!s.forward) piece = piece.reversed();
      out.append(piece.embedded(cur, s.position));
    }
    cur = s.result;
  }
  return out;
}

std::string to_string(const Trace& trace) {
  std::string out = to_string(trace.start());
  for (const TraceStep& s : trace.steps()) {
    out += s.forward ? "\n  -> " : "\n  <- ";
    out += to_string(s.result) + "   [rule " + std::to_string(s.rule + 1) + " at " +
           to_string(s.position) + "]";
  }
  return out;
}

}  // namespace unc
