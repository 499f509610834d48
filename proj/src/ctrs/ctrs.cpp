#include "unc/ctrs/ctrs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "unc/term/unify.hpp"

namespace unc {

std::string to_string(const Equation& e) { return to_string(e.lhs) + " ≈ " + to_string(e.rhs); }

std::string to_string(const std::vector<Equation>& gamma) {
  if (gamma.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i) out += ", ";
    out += to_string(gamma[i]);
  }
  return out;
}

Equation apply(const Substitution& sigma, const Equation& e) {
  return {sigma.apply(e.lhs), sigma.apply(e.rhs)};
}

ConditionalRule::ConditionalRule(Term l, Term r, std::vector<Equation> c)
    : lhs(std::move(l)), rhs(std::move(r)), conditions(std::move(c)) {
  if (lhs.is_variable())
    throw RuleError("ill-formed conditional rule: left-hand side " + to_string(lhs) +
                    " is a variable");
}

bool ConditionalRule::type1() const {
  if (!variables_subset(rhs, lhs)) return false;
  for (const Equation& e : conditions)
    if (!variables_subset(e.lhs, lhs) || !variables_subset(e.rhs, lhs)) return false;
  return true;
}

bool ConditionalRule::lr_separated() const {
  if (lhs.is_variable() || !is_linear(lhs)) return false;
  std::set<Variable> xs, ys;
  for (const Equation& e : conditions) {
    if (!e.lhs.is_variable() || !e.rhs.is_variable()) return false;
    if (!xs.insert(e.lhs.as_variable()).second) return false;
    ys.insert(e.rhs.as_variable());
  }
  std::vector<Variable> lv = variables(lhs);
  if (std::set<Variable>(lv.begin(), lv.end()) != xs) return false;
  for (const Variable& v : variables(rhs))
    if (!ys.count(v)) return false;
  for (const Variable& y : ys)
    if (xs.count(y)) return false;
  return true;
}

bool ConditionalRule::non_duplicating() const {
  for (const Variable& y : variables(rhs)) {
    std::size_t in_conditions = 0;
    for (const Equation& e : conditions) in_conditions += occurrences(e.rhs, y);
    if (occurrences(rhs, y) > in_conditions) return false;
  }
  return true;
}

Term ConditionalRule::condition_lhs_tuple() const {
  std::vector<Term> ts;
  for (const Equation& e : conditions) ts.push_back(e.lhs);
  return make_tuple(std::move(ts));
}

Term ConditionalRule::condition_rhs_tuple() const {
  std::vector<Term> ts;
  for (const Equation& e : conditions) ts.push_back(e.rhs);
  return make_tuple(std::move(ts));
}

unsigned ConditionalRule::max_variable_index() const {
  unsigned m = std::max(unc::max_variable_index(lhs), unc::max_variable_index(rhs));
  for (const Equation& e : conditions)
    m = std::max({m, unc::max_variable_index(e.lhs), unc::max_variable_index(e.rhs)});
  return m;
}

std::string to_string(const ConditionalRule& rule) {
  std::string out = to_string(rule.lhs) + " -> " + to_string(rule.rhs);
  if (!rule.conditions.empty()) out += " <= " + to_string(rule.conditions);
  return out;
}

namespace {

void absorb(Signature& sig, const ConditionalRule& r) {
  sig.absorb(r.lhs);
  sig.absorb(r.rhs);
  for (const Equation& e : r.conditions) {
    sig.absorb(e.lhs);
    sig.absorb(e.rhs);
  }
}

}  // namespace

Ctrs::Ctrs(std::vector<ConditionalRule> rules) : rules_(std::move(rules)) {
  for (const ConditionalRule& r : rules_) absorb(signature_, r);
}

Ctrs::Ctrs(Signature signature, std::vector<ConditionalRule> rules)
    : signature_(std::move(signature)), rules_(std::move(rules)) {
  for (const ConditionalRule& r : rules_) {
    bool ok = signature_.admits(r.lhs) && signature_.admits(r.rhs);
    for (const Equation& e : r.conditions)
      ok = ok && signature_.admits(e.lhs) && signature_.admits(e.rhs);
    if (!ok)
      throw SignatureError("rule " + to_string(r) + " is not well formed over the signature");
  }
}

namespace {

template <typename Pred>
bool all_rules(const std::vector<ConditionalRule>& rules, Pred p) {
  return std::all_of(rules.begin(), rules.end(), p);
}

}  // namespace

bool Ctrs::left_linear() const { return all_rules(rules_, [](auto& r) { return r.left_linear(); }); }
bool Ctrs::linear() const { return all_rules(rules_, [](auto& r) { return r.linear(); }); }
bool Ctrs::type1() const { return all_rules(rules_, [](auto& r) { return r.type1(); }); }
bool Ctrs::lr_separated() const {
  return all_rules(rules_, [](auto& r) { return r.lr_separated(); });
}
bool Ctrs::non_duplicating() const {
  return all_rules(rules_, [](auto& r) { return r.non_duplicating(); });
}
bool Ctrs::unconditional() const {
  return all_rules(rules_, [](auto& r) { return r.conditions.empty(); });
}

unsigned Ctrs::max_variable_index() const {
  unsigned m = 0;
  for (const ConditionalRule& r : rules_) m = std::max(m, r.max_variable_index());
  return m;
}

std::string to_string(const Ctrs& ctrs) {
  std::string out;
  for (const ConditionalRule& r : ctrs.rules()) out += to_string(r) + "\n";
  return out;
}

Ctrs as_ctrs(const Trs& trs) {
  std::vector<ConditionalRule> rules;
  for (const RewriteRule& r : trs.rules()) rules.emplace_back(r.lhs, r.rhs);
  return Ctrs(trs.signature(), std::move(rules));
}

namespace {

/// Rebuilds `t` with the k-th occurrence of each variable x replaced by
/// `fresh(x, k)` (k counted from 1 in preorder) wherever `rename(x)` holds.
template <typename Rename, typename Fresh>
Term rename_occurrences(const Term& t, std::map<Variable, unsigned>& seen, Rename&& rename,
                        Fresh&& fresh) {
  if (t.is_variable()) {
    Variable v = t.as_variable();
    if (!rename(v)) return t;
    return Term::variable(fresh(v, ++seen[v]));
  }
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(rename_occurrences(a, seen, rename, fresh));
  return Term::apply(t.name(), std::move(args));
}

}  // namespace

Ctrs conditional_linearize(const Trs& trs) {
  std::vector<ConditionalRule> out;
  for (const RewriteRule& r : trs.rules()) {
    if (r.left_linear()) {
      out.emplace_back(r.lhs, r.rhs);
      continue;
    }
    unsigned base = std::max(max_variable_index(r.lhs), max_variable_index(r.rhs));
    auto nonlinear = [&](const Variable& v) { return occurrences(r.lhs, v) > 1; };
    auto fresh = [&](const Variable& v, unsigned k) { return Variable{v.name, base + k}; };
    std::map<Variable, unsigned> seen;
    Term lhs = rename_occurrences(r.lhs, seen, nonlinear, fresh);
    std::vector<Equation> gamma;
    Substitution first;
    for (const Variable& v : variables(r.lhs)) {
      std::size_t n = occurrences(r.lhs, v);
      if (n < 2) continue;
      first.bind(v, Term::variable(fresh(v, 1)));
      for (unsigned k = 1; k < n; ++k)
        gamma.push_back({Term::variable(fresh(v, k)), Term::variable(fresh(v, k + 1))});
    }
    out.emplace_back(lhs, first.apply(r.rhs), std::move(gamma));
  }
  return Ctrs(trs.signature(), std::move(out));
}

Ctrs lr_separated_linearize(const Trs& trs) {
  std::vector<ConditionalRule> out;
  for (const RewriteRule& r : trs.rules()) {
    unsigned base = std::max(max_variable_index(r.lhs), max_variable_index(r.rhs));
    auto all = [](const Variable&) { return true; };
    auto fresh = [&](const Variable& v, unsigned k) { return Variable{v.name, base + k}; };
    std::map<Variable, unsigned> seen;
    Term lhs = rename_occurrences(r.lhs, seen, all, fresh);
    // Conditions follow the occurrence order of the lhs.
    std::vector<Equation> gamma;
    std::map<Variable, unsigned> count;
    for (const Position& p : positions(r.lhs)) {
      const Term& sub = subterm_at(r.lhs, p);
      if (!sub.is_variable()) continue;
      Variable v = sub.as_variable();
      gamma.push_back({Term::variable(fresh(v, ++count[v])), sub});
    }
    out.emplace_back(lhs, r.rhs, std::move(gamma));
  }
  return Ctrs(trs.signature(), std::move(out));
}

std::string to_string(const ConditionalCriticalPair& ccp) {
  return to_string(ccp.gamma) + " => <" + to_string(ccp.left) + ", " + to_string(ccp.right) +
         "> (" + to_string(ccp.kind) + ", rule " + std::to_string(ccp.inner + 1) + " into rule " +
         std::to_string(ccp.outer + 1) + " at " + to_string(ccp.position) + ")";
}

std::vector<ConditionalCriticalPair> conditional_critical_pairs(const Ctrs& ctrs) {
  std::vector<ConditionalCriticalPair> out;
  std::set<std::pair<std::vector<Term>, OverlapKind>> seen;
  unsigned floor = ctrs.max_variable_index();
  for (std::size_t outer = 0; outer < ctrs.size(); ++outer) {
    const ConditionalRule& r2 = ctrs[outer];
    for (std::size_t inner = 0; inner < ctrs.size(); ++inner) {
      const ConditionalRule& source = ctrs[inner];
      std::vector<Term> parts{source.lhs, source.rhs};
      for (const Equation& e : source.conditions) {
        parts.push_back(e.lhs);
        parts.push_back(e.rhs);
      }
      Substitution rename = renaming_above(parts, floor);
      Term l1 = rename.apply(source.lhs);
      Term r1 = rename.apply(source.rhs);
      for (const Position& p : function_positions(r2.lhs)) {
        if (p.is_root() && inner == outer) continue;
        auto sigma = mgu(l1, subterm_at(r2.lhs, p));
        if (!sigma) continue;
        Substitution full = rename.then(*sigma);
        ConditionalCriticalPair ccp{{},
                                    sigma->apply(replace_at(r2.lhs, p, r1)),
                                    sigma->apply(r2.rhs),
                                    p.is_root() ? OverlapKind::Overlay : OverlapKind::InnerOuter,
                                    outer,
                                    inner,
                                    p,
                                    sigma->apply(r2.lhs)};
        for (const Equation& e : source.conditions) ccp.gamma.push_back(apply(full, e));
        for (const Equation& e : r2.conditions) ccp.gamma.push_back(apply(*sigma, e));
        std::vector<Term> key_terms{ccp.left, ccp.right};
        for (const Equation& e : ccp.gamma) {
          key_terms.push_back(e.lhs);
          key_terms.push_back(e.rhs);
        }
        if (!seen.emplace(canonical_variant(key_terms), ccp.kind).second) continue;
        out.push_back(std::move(ccp));
      }
    }
  }
  return out;
}

}  // namespace unc
