#include "unc/term/substitution.hpp"

#include <algorithm>

namespace unc {

void Substitution::bind(const Variable& v, Term t) {
  if (t.is_variable() && t.name() == v.name && t.index() == v.index) {
    bindings_.erase(v);
    return;
  }
  bindings_.insert_or_assign(v, std::move(t));
}

const Term* Substitution::find(const Variable& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (bindings_.empty()) return t;
  if (t.is_variable()) {
    const Term* b = find(t.as_variable());
    return b ? *b : t;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !args.back().same_node(a);
  }
  return changed ? Term::apply(t.name(), std::move(args)) : t;
}

Substitution Substitution::then(const Substitution& after) const {
  Substitution out;
  for (const auto& [v, t] : bindings_) out.bind(v, after.apply(t));
  for (const auto& [v, t] : after.bindings_)
    if (!binds(v)) out.bind(v, t);
  return out;
}

std::vector<Variable> Substitution::domain() const {
  std::vector<Variable> out;
  for (const auto& [v, t] : bindings_) out.push_back(v);
  return out;
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(v) + "->" + to_string(t);
  }
  return out + "}";
}

Substitution renaming_above(std::span<const Term> terms, unsigned floor) {
  Substitution s;
  for (const Variable& v : variables(terms))
    s.bind(v, Term::variable(v.name, v.index + floor + 1));
  return s;
}

namespace {

bool variant_rec(const Term& a, const Term& b, std::map<Variable, Variable>& fwd,
                 std::map<Variable, Variable>& bwd) {
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) {
    Variable va = a.as_variable(), vb = b.as_variable();
    auto f = fwd.find(va);
    auto g = bwd.find(vb);
    if (f == fwd.end() && g == bwd.end()) {
      fwd.emplace(va, vb);
      bwd.emplace(vb, va);
      return true;
    }
    return f != fwd.end() && g != bwd.end() && f->second == vb && g->second == va;
  }
  if (a.name() != b.name() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!variant_rec(a.arg(i), b.arg(i), fwd, bwd)) return false;
  return true;
}

}  // namespace

bool is_variant(std::span<const Term> a, std::span<const Term> b) {
  if (a.size() != b.size()) return false;
  std::map<Variable, Variable> fwd, bwd;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!variant_rec(a[i], b[i], fwd, bwd)) return false;
  return true;
}

bool is_variant(const Term& a, const Term& b) {
  return is_variant(std::span<const Term>(&a, 1), std::span<const Term>(&b, 1));
}

std::vector<Term> canonical_variant(std::span<const Term> terms) {
  Substitution s;
  unsigned n = 0;
  for (const Variable& v : variables(terms)) s.bind(v, Term::variable("v", ++n));
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) out.push_back(s.apply(t));
  return out;
}

}  // namespace unc
