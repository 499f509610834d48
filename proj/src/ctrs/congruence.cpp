#include "unc/ctrs/congruence.hpp"

namespace unc {

CongruenceClosure::CongruenceClosure(std::span<const Equation> equations) { merge(equations); }

int CongruenceClosure::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

CongruenceClosure::Signature CongruenceClosure::signature_of(int node) {
  std::vector<int> args;
  args.reserve(children_[node].size());
  for (int c : children_[node]) args.push_back(find(c));
  return {symbol_[node], std::move(args)};
}

int CongruenceClosure::add_term(const Term& t) {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  std::vector<int> children;
  for (const Term& a : t.args()) children.push_back(add_term(a));
  int id = static_cast<int>(parent_.size());
  ids_.emplace(t, id);
  parent_.push_back(id);
  symbol_.push_back(t.is_variable() ? std::string() : t.name());
  children_.push_back(children);
  uses_.emplace_back();
  if (!t.is_variable()) {
    for (int c : children) uses_[find(c)].push_back(id);
    Signature sig = signature_of(id);
    auto [it, inserted] = table_.emplace(sig, id);
    if (!inserted) merge_nodes(id, it->second);
  }
  return id;
}

void CongruenceClosure::merge_nodes(int a, int b) {
  std::vector<std::pair<int, int>> pending{{a, b}};
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    int rx = find(x), ry = find(y);
    if (rx == ry) continue;
    if (uses_[rx].size() > uses_[ry].size()) std::swap(rx, ry);
    std::vector<int> moved = std::move(uses_[rx]);
    uses_[rx].clear();
    for (int u : moved) {
      auto it = table_.find(signature_of(u));
      if (it != table_.end() && it->second == u) table_.erase(it);
    }
    parent_[rx] = ry;
    for (int u : moved) {
      Signature sig = signature_of(u);
      auto [it, inserted] = table_.emplace(sig, u);
      if (!inserted && find(it->second) != find(u)) pending.emplace_back(u, it->second);
      uses_[ry].push_back(u);
    }
  }
}

void CongruenceClosure::merge(const Term& s, const Term& t) {
  int a = add_term(s);
  int b = add_term(t);
  merge_nodes(a, b);
}

void CongruenceClosure::merge(std::span<const Equation> equations) {
  for (const Equation& e : equations) merge(e.lhs, e.rhs);
}

bool CongruenceClosure::equivalent(const Term& s, const Term& t) {
  int a = add_term(s);
  int b = add_term(t);
  return find(a) == find(b);
}

bool cc_entails(std::span<const Equation> gamma, const Term& s, const Term& t) {
  CongruenceClosure cc(gamma);
  return cc.equivalent(s, t);
}

}  // namespace unc
