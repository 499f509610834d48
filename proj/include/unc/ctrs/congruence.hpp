#pragma once

#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unc/ctrs/ctrs.hpp"
#include "unc/term/term.hpp"

namespace unc {

/// Congruence closure over a growing set of terms. Variables are opaque
/// constants. Terms may be added after merges; congruences are propagated on
/// insertion.
class CongruenceClosure {
 public:
  CongruenceClosure() = default;
  explicit CongruenceClosure(std::span<const Equation> equations);

  /// Adds `t` and its subterms; returns the node of `t`.
  int add_term(const Term& t);
  void merge(const Term& s, const Term& t);
  void merge(std::span<const Equation> equations);
  bool equivalent(const Term& s, const Term& t);

  std::size_t node_count() const { return parent_.size(); }

 private:
  using Signature = std::pair<std::string, std::vector<int>>;

  int find(int x);
  void merge_nodes(int a, int b);
  Signature signature_of(int node);

  std::unordered_map<Term, int> ids_;
  std::vector<int> parent_;
  std::vector<std::string> symbol_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> uses_;
  std::map<Signature, int> table_;
};

/// Whether s ≈ t holds in the congruence closure of Γ.
bool cc_entails(std::span<const Equation> gamma, const Term& s, const Term& t);

}  // namespace unc
