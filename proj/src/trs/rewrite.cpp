#include "unc/trs/rewrite.hpp"

#include <deque>
#include <stdexcept>
#include <utility>

#include "unc/term/unify.hpp"

namespace unc {

std::vector<RewriteStep> rewrite_steps(const Trs& trs, const Term& t) {
  std::vector<RewriteStep> out;
  for (const Position& p : function_positions(t)) {
    const Term& sub = subterm_at(t, p);
    for (std::size_t i = 0; i < trs.size(); ++i) {
      if (auto sigma = match(trs[i].lhs, sub))
        out.push_back({p, i, replace_at(t, p, sigma->apply(trs[i].rhs))});
    }
  }
  return out;
}

std::vector<RewriteStep> backward_steps(const Trs& trs, const Term& t) {
  std::vector<RewriteStep> out;
  unsigned fresh_index = max_variable_index(t) + 1;
  for (const Position& p : positions(t)) {
    const Term& sub = subterm_at(t, p);
    for (std::size_t i = 0; i < trs.size(); ++i) {
      auto sigma = match(trs[i].rhs, sub);
      if (!sigma) continue;
      for (const Variable& v : variables(trs[i].lhs))
        if (!sigma->binds(v) && !occurs(v, trs[i].rhs))
          sigma->bind(v, Term::variable(v.name, fresh_index));
      out.push_back({p, i, replace_at(t, p, sigma->apply(trs[i].lhs))});
    }
  }
  return out;
}

std::optional<RewriteStep> first_redex(const Trs& trs, const Term& t) {
  for (const Position& p : function_positions(t)) {
    const Term& sub = subterm_at(t, p);
    for (std::size_t i = 0; i < trs.size(); ++i)
      if (auto sigma = match(trs[i].lhs, sub))
        return RewriteStep{p, i, replace_at(t, p, sigma->apply(trs[i].rhs))};
  }
  return std::nullopt;
}

bool is_normal_form(const Trs& trs, const Term& t) { return !first_redex(trs, t).has_value(); }

namespace {

/// Cartesian product of per-argument choices; stops once `combine` returns
/// false.
template <typename Choice, typename Combine>
bool product(const std::vector<std::vector<Choice>>& choices, std::size_t i,
             std::vector<const Choice*>& picked, Combine&& combine) {
  if (i == choices.size()) return combine(picked);
  for (const Choice& c : choices[i]) {
    picked.push_back(&c);
    bool more = product(choices, i + 1, picked, combine);
    picked.pop_back();
    if (!more) return false;
  }
  return true;
}

void parallel_rec(const Trs& trs, const Term& t, std::set<Term>& out) {
  if (t.is_variable()) {
    out.insert(t);
    return;
  }
  std::vector<std::vector<Term>> choices;
  for (const Term& a : t.args()) {
    std::set<Term> sub;
    parallel_rec(trs, a, sub);
    choices.emplace_back(sub.begin(), sub.end());
  }
  std::vector<const Term*> picked;
  product(choices, 0, picked, [&](const std::vector<const Term*>& args) {
    std::vector<Term> built;
    for (const Term* a : args) built.push_back(*a);
    out.insert(Term::apply(t.name(), std::move(built)));
    return true;
  });
  for (std::size_t i = 0; i < trs.size(); ++i)
    if (auto sigma = match(trs[i].lhs, t)) out.insert(sigma->apply(trs[i].rhs));
}

using RedexSequence = std::vector<std::pair<Position, std::size_t>>;
using DevMap = std::map<Term, RedexSequence>;

RedexSequence prefixed(const Position& at, const RedexSequence& seq) {
  RedexSequence out;
  out.reserve(seq.size());
  for (const auto& [p, r] : seq) out.emplace_back(at.concat(p), r);
  return out;
}

/// One multistep: reducts of t with a sequentialisation of each multistep
/// (inner redexes first, then the outer one).
void develop_once(const Trs& trs, const Term& t, const Budget& budget, DevMap& out,
                  bool& truncated) {
  if (t.is_variable()) {
    out.emplace(t, RedexSequence{});
    return;
  }
  // Combinations tried, including duplicates and oversized ones.
  std::size_t tried = 0;
  auto insert = [&](Term w, RedexSequence seq) {
    if (out.size() >= budget.state_cap || ++tried > 4 * budget.state_cap) {
      truncated = true;
      return false;
    }
    if (w.size() > budget.size_cap) {
      truncated = true;
      return true;
    }
    out.emplace(std::move(w), std::move(seq));
    return true;
  };

  std::vector<std::vector<std::pair<Term, RedexSequence>>> arg_choices;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    DevMap sub;
    develop_once(trs, t.arg(i), budget, sub, truncated);
    auto& choice = arg_choices.emplace_back();
    for (auto& [w, seq] : sub) choice.emplace_back(w, prefixed(Position({i + 1}), seq));
  }
  std::vector<const std::pair<Term, RedexSequence>*> picked;
  product(arg_choices, 0, picked, [&](const auto& args) {
    std::vector<Term> built;
    RedexSequence seq;
    for (const auto* a : args) {
      built.push_back(a->first);
      seq.insert(seq.end(), a->second.begin(), a->second.end());
    }
    return insert(Term::apply(t.name(), std::move(built)), std::move(seq));
  });

  for (std::size_t r = 0; r < trs.size(); ++r) {
    auto sigma = match(trs[r].lhs, t);
    if (!sigma) continue;
    const Term& lhs = trs[r].lhs;
    std::vector<Variable> vars = variables(lhs);
    std::vector<std::vector<std::pair<Term, RedexSequence>>> var_choices;
    for (const Variable& v : vars) {
      DevMap sub;
      develop_once(trs, sigma->apply(Term::variable(v)), budget, sub, truncated);
      auto& choice = var_choices.emplace_back();
      for (auto& [w, seq] : sub) choice.emplace_back(w, seq);
    }
    std::vector<Position> lhs_positions = positions(lhs);
    std::vector<const std::pair<Term, RedexSequence>*> chosen;
    product(var_choices, 0, chosen, [&](const auto& picks) {
      Substitution tau;
      RedexSequence seq;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        tau.bind(vars[k], picks[k]->first);
        for (const Position& q : lhs_positions) {
          const Term& at = subterm_at(lhs, q);
          if (at.is_variable() && at.as_variable() == vars[k]) {
            auto part = prefixed(q, picks[k]->second);
            seq.insert(seq.end(), part.begin(), part.end());
          }
        }
      }
      seq.emplace_back(Position(), r);
      return insert(tau.apply(trs[r].rhs), std::move(seq));
    });
  }
}

Trace materialize(const Trs& trs, const Term& start, const RedexSequence& seq) {
  Trace trace(start);
  Term cur = start;
  for (const auto& [p, r] : seq) {
    auto sigma = match(trs[r].lhs, subterm_at(cur, p));
    if (!sigma) throw std::logic_error("development sequence does not replay");
    cur = replace_at(cur, p, sigma->apply(trs[r].rhs));
    trace.push({p, r, true, cur});
  }
  return trace;
}

}  // namespace

std::set<Term> parallel_step_reducts(const Trs& trs, const Term& t) {
  std::set<Term> out;
  parallel_rec(trs, t, out);
  return out;
}

std::set<Term> DevelopmentReducts::terms() const {
  std::set<Term> out;
  for (const auto& [t, trace] : reducts) out.insert(t);
  return out;
}

DevelopmentReducts development_step_reducts(const Trs& trs, const Term& t, unsigned iterations,
                                            const Budget& budget) {
  DevelopmentReducts result;
  result.reducts.emplace(t, Trace(t));
  std::vector<Term> frontier{t};
  auto full = [&] { return result.reducts.size() >= budget.state_cap; };
  for (unsigned k = 0; k < iterations && !frontier.empty() && !full(); ++k) {
    std::vector<Term> next;
    for (const Term& u : frontier) {
      if (budget.expired()) throw TimeoutError();
      if (full()) {
        result.truncated = true;
        break;
      }
      DevMap once;
      develop_once(trs, u, budget, once, result.truncated);
      for (const auto& [w, seq] : once) {
        if (result.reducts.count(w)) continue;
        if (result.reducts.size() >= budget.state_cap) {
          result.truncated = true;
          break;
        }
        Trace trace = result.reducts.at(u);
        trace.append(materialize(trs, u, seq));
        result.reducts.emplace(w, std::move(trace));
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return result;
}

Exploration::Exploration(const Trs& trs, const Term& start, unsigned depth, const Budget& budget,
                         bool conversions) {
  order_.push_back(start);
  parents_.emplace_back();
  depth_.push_back(0);
  index_.emplace(start, 0);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    if (depth_[head] >= depth) continue;
    if (budget.expired()) throw TimeoutError();
    Term cur = order_[head];
    auto visit = [&](const RewriteStep& s, bool forward) {
      if (s.result.size() > budget.size_cap) {
        truncated_ = true;
        return;
      }
      if (index_.count(s.result)) return;
      if (order_.size() >= budget.state_cap) {
        truncated_ = true;
        return;
      }
      index_.emplace(s.result, order_.size());
      order_.push_back(s.result);
      parents_.push_back(Parent{head, TraceStep{s.position, s.rule, forward, s.result}});
      depth_.push_back(depth_[head] + 1);
    };
    for (const RewriteStep& s : rewrite_steps(trs, cur)) visit(s, true);
    if (conversions)
      for (const RewriteStep& s : backward_steps(trs, cur)) visit(s, false);
  }
}

Trace Exploration::trace_to(const Term& t) const {
  std::vector<const TraceStep*> rev;
  std::size_t i = index_.at(t);
  while (parents_[i]) {
    rev.push_back(&parents_[i]->step);
    i = parents_[i]->from;
  }
  Trace trace(order_.front());
  for (std::size_t k = rev.size(); k-- > 0;) trace.push(*rev[k]);
  return trace;
}

unsigned Exploration::distance(const Term& t) const { return depth_[index_.at(t)]; }

std::set<Term> bounded_reducts(const Trs& trs, const Term& s, unsigned depth, const Budget& budget) {
  Exploration e(trs, s, depth, budget, false);
  return {e.terms().begin(), e.terms().end()};
}

std::set<Term> bounded_conversions(const Trs& trs, const Term& s, unsigned depth,
                                   std::size_t size_cap) {
  Budget budget;
  budget.size_cap = size_cap;
  budget.state_cap = static_cast<std::size_t>(-1);
  Exploration e(trs, s, depth, budget, true);
  return {e.terms().begin(), e.terms().end()};
}

}  // namespace unc
