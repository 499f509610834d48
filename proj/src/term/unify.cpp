#include "unc/term/unify.hpp"

#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

namespace unc {

namespace {

bool match_rec(const Term& pattern, const Term& subject, std::map<Variable, Term>& env) {
  if (pattern.is_variable()) {
    auto [it, inserted] = env.emplace(pattern.as_variable(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_variable() || pattern.name() != subject.name() ||
      pattern.arity() != subject.arity())
    return false;
  for (std::size_t i = 0; i < pattern.arity(); ++i)
    if (!match_rec(pattern.arg(i), subject.arg(i), env)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  // Identity bindings are kept in `env` so that later occurrences of the same
  // variable are checked against them.
  std::map<Variable, Term> env;
  if (!match_rec(pattern, subject, env)) return std::nullopt;
  Substitution s;
  for (auto& [v, t] : env) s.bind(v, std::move(t));
  return s;
}

std::optional<Substitution> mgu(const Term& s, const Term& t) {
  Substitution sigma;
  std::vector<std::pair<Term, Term>> work{{s, t}};
  while (!work.empty()) {
    auto [a0, b0] = std::move(work.back());
    work.pop_back();
    Term a = sigma.apply(a0);
    Term b = sigma.apply(b0);
    if (a == b) continue;
    if (!a.is_variable() && b.is_variable()) std::swap(a, b);
    if (a.is_variable()) {
      Variable x = a.as_variable();
      if (occurs(x, b)) return std::nullopt;
      Substitution single;
      single.bind(x, b);
      sigma = sigma.then(single);
      continue;
    }
    if (a.name() != b.name() || a.arity() != b.arity()) return std::nullopt;
    for (std::size_t i = a.arity(); i-- > 0;) work.emplace_back(a.arg(i), b.arg(i));
  }
  return sigma;
}

namespace {

/// Union-find over the subterm graph of two terms; function-symbol classes
/// carry one representative node whose arguments are unified on merge.
class RationalUnifier {
 public:
  int node(const Term& t) {
    auto it = ids_.find(t);
    if (it != ids_.end()) return it->second;
    std::vector<int> children;
    for (const Term& a : t.args()) children.push_back(node(a));
    int id = static_cast<int>(parent_.size());
    ids_.emplace(t, id);
    parent_.push_back(id);
    symbol_.push_back(t.is_variable() ? std::string() : t.name());
    children_.push_back(std::move(children));
    rep_.push_back(t.is_variable() ? -1 : id);
    return id;
  }

  bool unify(int a, int b) {
    std::vector<std::pair<int, int>> work{{a, b}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      int rx = find(x), ry = find(y);
      if (rx == ry) continue;
      int fx = rep_[rx], fy = rep_[ry];
      parent_[rx] = ry;
      if (fx < 0) continue;
      if (fy < 0) {
        rep_[ry] = fx;
        continue;
      }
      if (symbol_[fx] != symbol_[fy] || children_[fx].size() != children_[fy].size())
        return false;
      for (std::size_t i = 0; i < children_[fx].size(); ++i)
        work.emplace_back(children_[fx][i], children_[fy][i]);
    }
    return true;
  }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::unordered_map<Term, int> ids_;
  std::vector<int> parent_;
  std::vector<std::string> symbol_;
  std::vector<std::vector<int>> children_;
  std::vector<int> rep_;
};

}  // namespace

bool unifiable_rational(const Term& s, const Term& t) {
  RationalUnifier u;
  int a = u.node(s);
  int b = u.node(t);
  return u.unify(a, b);
}

}  // namespace unc
