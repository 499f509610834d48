#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unc {

/// A variable is identified by its name and a renaming index. Variables read
/// from input carry index 0; fresh variables produced by renaming carry a
/// positive index and print as `name_index`.
struct Variable {
  std::string name;
  unsigned index = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b);
};

std::string to_string(const Variable& v);

/// Immutable first-order term with structural sharing. Copies are cheap.
class Term {
 public:
  static Term variable(Variable v);
  static Term variable(std::string name, unsigned index = 0);
  static Term apply(std::string symbol, std::vector<Term> args = {});

  bool is_variable() const { return node_->is_variable; }
  bool is_constant() const { return !is_variable() && node_->args.empty(); }

  /// Symbol name for applications, variable name for variables.
  const std::string& name() const { return node_->name; }
  unsigned index() const { return node_->index; }
  Variable as_variable() const;

  std::span<const Term> args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args[i]; }
  std::size_t arity() const { return node_->args.size(); }

  /// Number of symbol and variable occurrences.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    std::string name;
    unsigned index = 0;
    bool is_variable = false;
    std::vector<Term> args;
    std::size_t size = 1;
    std::size_t hash = 0;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Symbol used for condition tuples ⟨t1,…,tn⟩. Never part of a user signature.
inline constexpr std::string_view kTupleSymbol = "";

Term make_tuple(std::vector<Term> components);
bool is_tuple(const Term& t);

std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

/// Smaller terms first, then structural order. Used wherever a canonical
/// choice among candidate terms is needed.
bool size_then_structure_less(const Term& a, const Term& b);

/// A sequence of argument indices (1-based). The empty sequence is the root.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<std::size_t> path) : path_(std::move(path)) {}

  bool is_root() const { return path_.empty(); }
  const std::vector<std::size_t>& path() const { return path_; }
  std::size_t depth() const { return path_.size(); }

  Position child(std::size_t i) const;
  Position concat(const Position& suffix) const;
  bool is_prefix_of(const Position& other) const;
  bool is_parallel_to(const Position& other) const;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<std::size_t> path_;
};

std::string to_string(const Position& p);
std::ostream& operator<<(std::ostream& os, const Position& p);

/// Whether `p` addresses a subterm of `t`.
bool is_valid_position(const Term& t, const Position& p);
const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, Term replacement);

/// All positions of `t` in preorder (root first, arguments left to right).
std::vector<Position> positions(const Term& t);
std::vector<Position> function_positions(const Term& t);

/// Distinct variables in order of first occurrence.
std::vector<Variable> variables(const Term& t);
std::vector<Variable> variables(std::span<const Term> ts);
void collect_variables(const Term& t, std::vector<Variable>& out);
bool occurs(const Variable& v, const Term& t);
std::size_t occurrences(const Term& t, const Variable& v);
bool is_linear(const Term& t);
bool is_ground(const Term& t);
/// Whether every variable of `inner` occurs in `outer`.
bool variables_subset(const Term& inner, const Term& outer);
unsigned max_variable_index(const Term& t);

/// Function symbols of `t` with their arities, in order of first occurrence.
std::vector<std::pair<std::string, std::size_t>> function_symbols(const Term& t);

/// Hands out variables that cannot clash with a reserved set of terms.
class VariableSupply {
 public:
  explicit VariableSupply(unsigned next_index = 1) : next_(next_index) {}

  void reserve(const Term& t);
  Variable fresh(std::string_view hint);
  Term fresh_term(std::string_view hint) { return Term::variable(fresh(hint)); }

 private:
  unsigned next_;
};

}  // namespace unc

template <>
struct std::hash<unc::Term> {
  std::size_t operator()(const unc::Term& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<unc::Variable> {
  std::size_t operator()(const unc::Variable& v) const noexcept {
    return std::hash<std::string>{}(v.name) * 31u + v.index;
  }
};
