#include "unc/completion/completion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "unc/criteria/closure.hpp"
#include "unc/term/substitution.hpp"
#include "unc/trs/rewrite.hpp"

namespace unc {

namespace {

unsigned max_index(const Trace& trace) {
  unsigned m = max_variable_index(trace.start());
  for (const TraceStep& s : trace.steps()) m = std::max(m, max_variable_index(s.result));
  return m;
}

bool known_rule(const std::vector<RewriteRule>& rules, const RewriteRule& r) {
  return std::any_of(rules.begin(), rules.end(), [&](const RewriteRule& x) { return is_variant(x, r); });
}

/// From s ↔* t with t normal and V(t) ⊄ V(s): t ↔* s ↔* tθ where θ renames
/// a variable of t missing from s.
Counterexample escape_witness(const Trace& s_to_t) {
  const Term& s = s_to_t.start();
  const Term& t = s_to_t.end();
  for (const Variable& y : variables(t)) {
    if (occurs(y, s)) continue;
    Substitution theta;
    theta.bind(y, Term::variable(y.name, max_index(s_to_t) + 1));
    Trace conversion = s_to_t.reversed();
    conversion.append(s_to_t.instantiated(theta));
    return {t, theta.apply(t), std::move(conversion),
            "normal form " + to_string(t) + " is convertible to " + to_string(s) +
                ", which lacks variable " + to_string(y)};
  }
  throw std::logic_error("escape_witness: no escaping variable");
}

Trace joined(Trace first, const Trace& second) {
  first.append(second);
  return first;
}

}  // namespace

ConfluencePredicate strongly_closed_predicate() {
  return {"sc", [](const Trs& trs) { return trs.linear(); },
          [](const Trs& trs, const CriticalPair& cp, const Budget& budget, bool* truncated) {
            return strongly_joinable(trs, cp.left, cp.right, budget, truncated);
          }};
}

ConfluencePredicate development_closed_predicate() {
  return {"dc", [](const Trs& trs) { return trs.left_linear(); },
          [](const Trs& trs, const CriticalPair& cp, const Budget& budget, bool* truncated) {
            return development_joinable(trs, cp, budget, truncated);
          }};
}

Trace critical_pair_trace(const CriticalPair& cp) {
  Trace trace(cp.left);
  trace.push({cp.position, cp.inner, false, cp.peak});
  trace.push({Position(), cp.outer, true, cp.right});
  return trace;
}

bool validate_counterexample(const Trs& trs, const Counterexample& cex) {
  return cex.left != cex.right && is_normal_form(trs, cex.left) && is_normal_form(trs, cex.right) &&
         cex.conversion.start() == cex.left && cex.conversion.end() == cex.right &&
         replay(trs, cex.conversion);
}

CompletionResult unc_complete(const Trs& trs, const ConfluencePredicate& predicate,
                              std::size_t max_rounds, const Budget& budget) {
  CompletionResult result{Undecided{"no rounds"}, trs, 0};
  std::vector<AddedRule> added;
  std::vector<Trace> definitions;
  Trs current = trs;
  auto original = [&](const Trace& t) { return expand_trace(t, trs.size(), definitions); };
  auto refuted = [&](Counterexample cex) {
    result.verdict = NotUncProof{predicate.name, std::move(cex), added};
    result.system = current;
    return result;
  };

  try {
    for (std::size_t round = 1; round <= max_rounds; ++round) {
      result.rounds = round;
      if (budget.expired()) throw TimeoutError();

      // Steps 1 and 2.
      std::vector<CriticalPair> open;
      std::vector<std::string> closings;
      for (const CriticalPair& cp : critical_pairs(current)) {
        std::string pair = "<" + to_string(cp.left) + ", " + to_string(cp.right) + ">";
        if (cp.left == cp.right) {
          closings.push_back(pair + ": trivial");
          continue;
        }
        bool truncated = false;
        if (auto how = predicate.closes(current, cp, budget, &truncated))
          closings.push_back(pair + ": " + *how);
        else
          open.push_back(cp);
      }
      if (open.empty() && predicate.guard(current)) {
        result.verdict = UncProof{predicate.name, std::move(closings), added};
        result.system = current;
        return result;
      }

      // Step 3.
      std::vector<RewriteRule> fresh;
      std::vector<Trace> fresh_defs;
      auto propose = [&](RewriteRule rule, Trace conversion) {
        if (known_rule(current.rules(), rule) || known_rule(fresh, rule)) return;
        fresh.push_back(std::move(rule));
        fresh_defs.push_back(std::move(conversion));
      };
      for (const CriticalPair& cp : open) {
        const Term& u = cp.left;
        const Term& v = cp.right;
        const bool u_nf = is_normal_form(current, u);
        const bool v_nf = is_normal_form(current, v);
        const Trace uv = critical_pair_trace(cp);
        if (u_nf && v_nf)
          return refuted({u, v, original(uv), "distinct normal forms of a critical pair"});
        if (!u_nf && v_nf) {
          if (!variables_subset(v, u)) return refuted(escape_witness(original(uv)));
          propose(RewriteRule(u, v), uv);
        } else if (u_nf && !v_nf) {
          if (!variables_subset(u, v)) return refuted(escape_witness(original(uv.reversed())));
          propose(RewriteRule(v, u), uv.reversed());
        } else {
          struct Candidate {
            Term lhs;
            Term rhs;
            Trace conversion;
          };
          std::vector<Candidate> candidates;
          auto collect = [&](const Term& from, const Term& lhs, const Trace& lhs_to_from) {
            DevelopmentReducts dev =
                development_step_reducts(current, from, budget.development_cap, budget);
            for (const auto& [w, trace] : dev.reducts) {
              if (w == lhs || !variables_subset(w, lhs)) continue;
              RewriteRule rule(lhs, w);
              if (known_rule(current.rules(), rule)) continue;
              candidates.push_back({lhs, w, joined(lhs_to_from, trace)});
            }
          };
          collect(u, v, uv.reversed());
          collect(v, u, uv);
          auto best = std::min_element(candidates.begin(), candidates.end(),
                                       [](const Candidate& a, const Candidate& b) {
                                         return size_then_structure_less(a.rhs, b.rhs);
                                       });
          if (best != candidates.end()) propose(RewriteRule(best->lhs, best->rhs), best->conversion);
        }
      }

      // Step 4.
      if (fresh.empty()) {
        result.verdict = Undecided{"completion found no rule to add in round " + std::to_string(round)};
        result.system = current;
        return result;
      }
      std::vector<Trace> expanded;
      for (const Trace& d : fresh_defs) expanded.push_back(original(d));
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        added.push_back({fresh[i], expanded[i], round});
        definitions.push_back(expanded[i]);
      }
      current = current.extended(fresh);
      if (current.size() != trs.size() + definitions.size())
        throw std::logic_error("unc_complete: rule bookkeeping out of sync");
    }
    result.verdict = Undecided{"no proof within " + std::to_string(max_rounds) + " rounds"};
  } catch (const TimeoutError&) {
    result.verdict = Undecided{"timeout"};
  }
  result.system = current;
  return result;
}

Reversal reverse_rules(const Trs& trs) {
  std::vector<RewriteRule> rules = trs.rules();
  std::vector<RuleOrigin> origin(rules.size());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i].original = i;

  auto without = [&](std::size_t skip) {
    std::vector<RewriteRule> rest;
    for (std::size_t j = 0; j < rules.size(); ++j)
      if (j != skip) rest.push_back(rules[j]);
    return Trs(std::move(rest));
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size() && !changed; ++i) {
      const Term l = rules[i].lhs;
      const Term r = rules[i].rhs;
      if (l == r) {
        if (!is_normal_form(without(i), l)) {
          rules.erase(rules.begin() + static_cast<long>(i));
          origin.erase(origin.begin() + static_cast<long>(i));
          changed = true;
        }
        continue;
      }
      if (r.is_variable() || !variables_subset(l, r) || l.size() >= r.size()) continue;
      if (is_normal_form(Trs(rules), r)) continue;
      const RuleOrigin o = origin[i];
      rules[i] = RewriteRule(l, l);
      origin[i] = {o.original, false, true};
      rules.insert(rules.begin() + static_cast<long>(i) + 1, RewriteRule(r, l));
      origin.insert(origin.begin() + static_cast<long>(i) + 1, {o.original, true, false});
      changed = true;
    }
  }

  Reversal out;
  std::vector<RewriteRule> unique;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (known_rule(unique, rules[i])) continue;
    unique.push_back(rules[i]);
    out.origin.push_back(origin[i]);
  }
  out.system = Trs(trs.signature(), std::move(unique));
  return out;
}

Trs rule_reverse(const Trs& trs) { return reverse_rules(trs).system; }

Trace restore_trace(const Reversal& reversal, const Trace& trace) {
  Trace out(trace.start());
  for (const TraceStep& s : trace.steps()) {
    const RuleOrigin& o = reversal.origin.at(s.rule);
    if (o.identity) continue;
    out.push({s.position, o.original, o.reversed ? !s.forward : s.forward, s.result});
  }
  return out;
}

std::optional<Counterexample> disprove_search(const Trs& trs, unsigned depth, std::size_t size_cap,
                                              const Budget& budget) {
  std::vector<Term> seeds;
  std::set<Term> seen;
  auto seed = [&](const Term& t) {
    if (seen.insert(t).second) seeds.push_back(t);
  };
  for (const CriticalPair& cp : critical_pairs(trs)) {
    seed(cp.left);
    seed(cp.right);
  }
  for (const RewriteRule& r : trs.rules()) seed(r.rhs);

  Budget bounded = budget;
  bounded.size_cap = size_cap;
  for (const Term& start : seeds) {
    if (budget.expired()) throw TimeoutError();
    Exploration ex(trs, start, depth, bounded, true);
    std::vector<Term> normal;
    for (const Term& t : ex.terms())
      if (is_normal_form(trs, t)) normal.push_back(t);
    for (const Term& t : normal)
      for (const Term& s : ex.terms())
        if (!variables_subset(t, s))
          return escape_witness(joined(ex.trace_to(s).reversed(), ex.trace_to(t)));
    if (normal.size() >= 2)
      return Counterexample{normal[0], normal[1],
                            joined(ex.trace_to(normal[0]).reversed(), ex.trace_to(normal[1])),
                            "distinct convertible normal forms"};
  }
  return std::nullopt;
}

std::vector<Component> direct_sum_decompose(const Trs& trs) {
  std::map<std::string, std::size_t> id;
  std::vector<std::size_t> parent;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto symbol = [&](const std::string& f) {
    auto [it, inserted] = id.emplace(f, parent.size());
    if (inserted) parent.push_back(it->second);
    return it->second;
  };
  std::vector<std::vector<std::size_t>> symbols_of(trs.size());
  for (std::size_t i = 0; i < trs.size(); ++i) {
    for (const Term* side : {&trs[i].lhs, &trs[i].rhs})
      for (const auto& f : function_symbols(*side)) symbols_of[i].push_back(symbol(f.first));
    for (std::size_t s : symbols_of[i]) parent[find(s)] = find(symbols_of[i].front());
  }

  std::vector<Component> out;
  std::map<std::size_t, std::size_t> slot;
  std::vector<std::vector<RewriteRule>> rules;
  for (std::size_t i = 0; i < trs.size(); ++i) {
    std::size_t root = find(symbols_of[i].front());
    auto [it, inserted] = slot.emplace(root, out.size());
    if (inserted) {
      out.emplace_back();
      rules.emplace_back();
    }
    out[it->second].rules.push_back(i);
    rules[it->second].push_back(trs[i]);
  }
  for (std::size_t c = 0; c < out.size(); ++c) out[c].system = Trs(std::move(rules[c]));
  return out;
}

Trace lift_trace(const Component& component, const Trace& trace) {
  Trace out(trace.start());
  for (TraceStep s : trace.steps()) {
    s.rule = component.rules.at(s.rule);
    out.push(std::move(s));
  }
  return out;
}

}  // namespace unc
