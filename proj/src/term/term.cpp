#include "unc/term/term.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace unc {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::strong_ordering compare_strings(const std::string& a, const std::string& b) {
  int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
  if (auto c = compare_strings(a.name, b.name); c != 0) return c;
  return a.index <=> b.index;
}

std::string to_string(const Variable& v) {
  if (v.index == 0) return v.name;
  return v.name + "_" + std::to_string(v.index);
}

Term Term::variable(Variable v) { return variable(std::move(v.name), v.index); }

Term Term::variable(std::string name, unsigned index) {
  auto node = std::make_shared<Node>();
  node->hash = mix(mix(std::hash<std::string>{}(name), index), 1);
  node->name = std::move(name);
  node->index = index;
  node->is_variable = true;
  return Term(std::move(node));
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  std::size_t h = mix(std::hash<std::string>{}(symbol), args.size() + 2);
  std::size_t size = 1;
  for (const Term& a : args) {
    h = mix(h, a.hash());
    size += a.size();
  }
  node->name = std::move(symbol);
  node->args = std::move(args);
  node->size = size;
  node->hash = h;
  return Term(std::move(node));
}

Variable Term::as_variable() const {
  if (!is_variable()) throw std::logic_error("term is not a variable");
  return Variable{node_->name, node_->index};
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  if (a.is_variable() != b.is_variable() || a.index() != b.index() ||
      a.name() != b.name() || a.arity() != b.arity())
    return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.arg(i) == b.arg(i))) return false;
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  // Variables sort before applications.
  if (a.is_variable() != b.is_variable())
    return a.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = compare_strings(a.name(), b.name()); c != 0) return c;
  if (a.is_variable()) return a.index() <=> b.index();
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (auto c = a.arg(i) <=> b.arg(i); c != 0) return c;
  return std::strong_ordering::equal;
}

Term make_tuple(std::vector<Term> components) {
  return Term::apply(std::string(kTupleSymbol), std::move(components));
}

bool is_tuple(const Term& t) { return !t.is_variable() && t.name() == kTupleSymbol; }

namespace {

void print(std::string& out, const Term& t) {
  if (t.is_variable()) {
    out += to_string(t.as_variable());
    return;
  }
  bool tuple = is_tuple(t);
  out += tuple ? "<" : t.name();
  if (t.arity() == 0 && !tuple) return;
  if (!tuple) out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    print(out, t.arg(i));
  }
  out += tuple ? '>' : ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(out, t);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }

bool size_then_structure_less(const Term& a, const Term& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Position Position::child(std::size_t i) const {
  auto path = path_;
  path.push_back(i);
  return Position(std::move(path));
}

Position Position::concat(const Position& suffix) const {
  auto path = path_;
  path.insert(path.end(), suffix.path_.begin(), suffix.path_.end());
  return Position(std::move(path));
}

bool Position::is_prefix_of(const Position& other) const {
  return path_.size() <= other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

bool Position::is_parallel_to(const Position& other) const {
  return !is_prefix_of(other) && !other.is_prefix_of(*this);
}

std::string to_string(const Position& p) {
  if (p.is_root()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < p.path().size(); ++i) {
    if (i) out += '.';
    out += std::to_string(p.path()[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Position& p) { return os << to_string(p); }

bool is_valid_position(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i : p.path()) {
    if (i == 0 || i > cur->arity()) return false;
    cur = &cur->arg(i - 1);
  }
  return true;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i : p.path()) {
    if (i == 0 || i > cur->arity())
      throw std::out_of_range("invalid position " + to_string(p) + " in " + to_string(t));
    cur = &cur->arg(i - 1);
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const std::vector<std::size_t>& path, std::size_t depth,
                 Term& replacement) {
  if (depth == path.size()) return std::move(replacement);
  std::size_t i = path[depth];
  if (i == 0 || i > t.arity()) throw std::out_of_range("invalid position in replace_at");
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[i - 1] = replace_rec(t.arg(i - 1), path, depth + 1, replacement);
  return Term::apply(t.name(), std::move(args));
}

void positions_rec(const Term& t, std::vector<std::size_t>& path, bool functions_only,
                   std::vector<Position>& out) {
  if (t.is_variable() && functions_only) return;
  out.emplace_back(path);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(i + 1);
    positions_rec(t.arg(i), path, functions_only, out);
    path.pop_back();
  }
}

}  // namespace

Term replace_at(const Term& t, const Position& p, Term replacement) {
  return replace_rec(t, p.path(), 0, replacement);
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  std::vector<std::size_t> path;
  positions_rec(t, path, false, out);
  return out;
}

std::vector<Position> function_positions(const Term& t) {
  std::vector<Position> out;
  std::vector<std::size_t> path;
  positions_rec(t, path, true, out);
  return out;
}

void collect_variables(const Term& t, std::vector<Variable>& out) {
  if (t.is_variable()) {
    Variable v = t.as_variable();
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    return;
  }
  for (const Term& a : t.args()) collect_variables(a, out);
}

std::vector<Variable> variables(const Term& t) {
  std::vector<Variable> out;
  collect_variables(t, out);
  return out;
}

std::vector<Variable> variables(std::span<const Term> ts) {
  std::vector<Variable> out;
  for (const Term& t : ts) collect_variables(t, out);
  return out;
}

bool occurs(const Variable& v, const Term& t) {
  if (t.is_variable()) return t.name() == v.name && t.index() == v.index;
  for (const Term& a : t.args())
    if (occurs(v, a)) return true;
  return false;
}

std::size_t occurrences(const Term& t, const Variable& v) {
  if (t.is_variable()) return (t.name() == v.name && t.index() == v.index) ? 1 : 0;
  std::size_t n = 0;
  for (const Term& a : t.args()) n += occurrences(a, v);
  return n;
}

bool is_linear(const Term& t) {
  for (const Variable& v : variables(t))
    if (occurrences(t, v) > 1) return false;
  return true;
}

bool is_ground(const Term& t) {
  if (t.is_variable()) return false;
  for (const Term& a : t.args())
    if (!is_ground(a)) return false;
  return true;
}

bool variables_subset(const Term& inner, const Term& outer) {
  for (const Variable& v : variables(inner))
    if (!occurs(v, outer)) return false;
  return true;
}

unsigned max_variable_index(const Term& t) {
  if (t.is_variable()) return t.index();
  unsigned m = 0;
  for (const Term& a : t.args()) m = std::max(m, max_variable_index(a));
  return m;
}

namespace {

void symbols_rec(const Term& t, std::vector<std::pair<std::string, std::size_t>>& out) {
  if (t.is_variable()) return;
  auto entry = std::make_pair(t.name(), t.arity());
  if (std::find(out.begin(), out.end(), entry) == out.end()) out.push_back(std::move(entry));
  for (const Term& a : t.args()) symbols_rec(a, out);
}

}  // namespace

std::vector<std::pair<std::string, std::size_t>> function_symbols(const Term& t) {
  std::vector<std::pair<std::string, std::size_t>> out;
  symbols_rec(t, out);
  return out;
}

void VariableSupply::reserve(const Term& t) { next_ = std::max(next_, max_variable_index(t) + 1); }

Variable VariableSupply::fresh(std::string_view hint) {
  return Variable{std::string(hint), next_++};
}

}  // namespace unc
