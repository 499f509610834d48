#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "unc/term/term.hpp"

namespace unc {

/// Finite map from variables to terms. Identity bindings are never stored.
class Substitution {
 public:
  Substitution() = default;

  void bind(const Variable& v, Term t);
  const Term* find(const Variable& v) const;
  bool binds(const Variable& v) const { return find(v) != nullptr; }

  Term apply(const Term& t) const;
  Term operator()(const Term& t) const { return apply(t); }

  /// The substitution t ↦ after(this(t)).
  Substitution then(const Substitution& after) const;

  std::vector<Variable> domain() const;
  const std::map<Variable, Term>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Variable, Term> bindings_;
};

std::string to_string(const Substitution& s);

/// Renames every variable of `terms` to (name, index + offset) where offset
/// lifts all indices above `floor`.
Substitution renaming_above(std::span<const Term> terms, unsigned floor);

/// Whether `a` and `b` are equal up to a bijective variable renaming, taken
/// jointly over the sequences.
bool is_variant(std::span<const Term> a, std::span<const Term> b);
bool is_variant(const Term& a, const Term& b);

/// Renames variables to v_1, v_2, … in order of first occurrence across the
/// sequence, so variants map to identical results.
std::vector<Term> canonical_variant(std::span<const Term> terms);

}  // namespace unc
