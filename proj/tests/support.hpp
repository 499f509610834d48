#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "unc/cli/problem.hpp"
#include "unc/ctrs/ctrs.hpp"
#include "unc/term/substitution.hpp"
#include "unc/term/term.hpp"
#include "unc/trs/trs.hpp"

namespace unc::testing {

/// Random instances per oracle and metamorphic suite.
inline constexpr int kInstances = 250;

inline const std::vector<std::string> kVars = {"x",  "y",  "z",  "w",  "x1",
                                               "x2", "x3", "y1", "y2", "y3"};

/// A term in Cops syntax; names from kVars are variables.
inline Term T(const std::string& text) { return parse_term(text, kVars); }

/// A TRS from whitespace-separated `l -> r` rules.
inline Trs R(const std::string& rules) {
  std::string text = "(VAR";
  for (const std::string& v : kVars) text += " " + v;
  return parse_cops(text + ")(RULES " + rules + ")").trs();
}

inline Equation E(const std::string& lhs, const std::string& rhs) { return {T(lhs), T(rhs)}; }

inline bool variant_pair(const Term& a1, const Term& a2, const Term& b1, const Term& b2) {
  std::vector<Term> a{a1, a2};
  std::vector<Term> b{b1, b2};
  return is_variant(a, b);
}

/// Γ and the pair as one sequence, for comparisons up to renaming.
inline std::vector<Term> flatten(const std::vector<Equation>& gamma, const Term& s, const Term& t) {
  std::vector<Term> out;
  for (const Equation& e : gamma) {
    out.push_back(e.lhs);
    out.push_back(e.rhs);
  }
  out.push_back(s);
  out.push_back(t);
  return out;
}

/// Random terms over a fixed signature.
class TermGen {
 public:
  TermGen(std::mt19937& rng, std::vector<std::pair<std::string, std::size_t>> symbols,
          std::vector<std::string> variables)
      : rng_(rng), symbols_(std::move(symbols)), variables_(std::move(variables)) {}

  Term term(int depth, double var_ratio = 0.3) {
    bool leaf = depth <= 0;
    if (!variables_.empty() && (leaf || chance(var_ratio)) && !(leaf && chance(0.5) && has_constant()))
      return Term::variable(pick(variables_), 0);
    std::vector<std::pair<std::string, std::size_t>> options;
    for (const auto& s : symbols_)
      if (!leaf || s.second == 0) options.push_back(s);
    if (options.empty()) return Term::variable(pick(variables_), 0);
    auto [name, arity] = pick(options);
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(term(depth - 1, var_ratio));
    return Term::apply(name, std::move(args));
  }

  Term ground(int depth) {
    std::vector<std::string> saved;
    std::swap(saved, variables_);
    Term t = term(depth);
    std::swap(saved, variables_);
    return t;
  }

  Term non_variable(int depth, double var_ratio = 0.3) {
    for (;;) {
      Term t = term(depth, var_ratio);
      if (!t.is_variable()) return t;
    }
  }

  /// A term over the variables of `lhs` only.
  Term over(const Term& lhs, int depth) {
    std::vector<std::string> saved = variables_;
    variables_.clear();
    for (const Variable& v : unc::variables(lhs)) variables_.push_back(v.name);
    Term t = term(depth);
    variables_ = std::move(saved);
    return t;
  }

  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  bool has_constant() const {
    return std::any_of(symbols_.begin(), symbols_.end(), [](const auto& s) { return s.second == 0; });
  }

  std::mt19937& rng_;
  std::vector<std::pair<std::string, std::size_t>> symbols_;
  std::vector<std::string> variables_;
};

/// All ground terms over `symbols` up to `depth`.
inline std::vector<Term> ground_terms(const std::vector<std::pair<std::string, std::size_t>>& symbols,
                                      int depth) {
  std::vector<Term> level;
  for (const auto& [name, arity] : symbols)
    if (arity == 0) level.push_back(Term::apply(name));
  for (int d = 1; d <= depth; ++d) {
    std::vector<Term> next;
    for (const auto& [name, arity] : symbols) {
      if (arity == 0) {
        next.push_back(Term::apply(name));
        continue;
      }
      std::vector<std::vector<Term>> tuples{{}};
      for (std::size_t i = 0; i < arity; ++i) {
        std::vector<std::vector<Term>> grown;
        for (const auto& tuple : tuples)
          for (const Term& t : level) {
            auto g = tuple;
            g.push_back(t);
            grown.push_back(std::move(g));
          }
        tuples = std::move(grown);
      }
      for (auto& tuple : tuples) next.push_back(Term::apply(name, std::move(tuple)));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace unc::testing
