// Differential suites: each library answer is compared with an independent,
// deliberately naive oracle on random instances from a fixed seed.

#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "support.hpp"
#include "unc/criteria/weight_decreasing.hpp"
#include "unc/ctrs/congruence.hpp"
#include "unc/term/unify.hpp"
#include "unc/trs/critical_pairs.hpp"

using namespace unc;

namespace {

using unc::testing::kInstances;

// Critical pairs against ground local peaks.

/// Every local peak t|p ← t → r_i θ with the inner redex at a function
/// position of the outer lhs, over all ground t in `universe`.
struct Peak {
  Term left;
  Term right;
  bool overlay;
};

std::vector<Peak> ground_peaks(const Trs& trs, const std::vector<Term>& universe) {
  std::vector<Peak> out;
  for (const Term& t : universe)
    for (std::size_t i = 0; i < trs.size(); ++i) {
      auto outer = match(trs[i].lhs, t);
      if (!outer) continue;
      for (const Position& p : function_positions(trs[i].lhs))
        for (std::size_t j = 0; j < trs.size(); ++j) {
          if (i == j && p.is_root()) continue;
          auto inner = match(trs[j].lhs, subterm_at(t, p));
          if (!inner) continue;
          out.push_back({replace_at(t, p, inner->apply(trs[j].rhs)), outer->apply(trs[i].rhs), p.is_root()});
        }
    }
  return out;
}

TEST(Oracle, CriticalPairsAgreeWithGroundPeaks) {
  std::mt19937 rng(1001);
  const std::vector<std::pair<std::string, std::size_t>> symbols{{"f", 2}, {"g", 1}, {"a", 0}};
  unc::testing::TermGen gen(rng, symbols, {"x", "y"});
  const std::vector<Term> universe = unc::testing::ground_terms(symbols, 3);
  int discrepancies = 0;
  int with_pairs = 0;
  for (int n = 0; n < kInstances; ++n) {
    std::vector<RewriteRule> rules;
    std::size_t count = 1 + gen.below(3);
    for (std::size_t k = 0; k < count; ++k) {
      Term lhs = gen.non_variable(2, 0.4);
      rules.emplace_back(lhs, gen.over(lhs, 2));
    }
    Trs trs(std::move(rules));
    std::vector<CriticalPair> cps = critical_pairs(trs);
    if (!cps.empty()) ++with_pairs;

    // Soundness: each pair comes from a genuine peak.
    for (const CriticalPair& cp : cps) {
      auto outer = match(trs[cp.outer].lhs, cp.peak);
      auto inner = is_valid_position(cp.peak, cp.position)
                       ? match(trs[cp.inner].lhs, subterm_at(cp.peak, cp.position))
                       : std::nullopt;
      bool ok = outer && inner && outer->apply(trs[cp.outer].rhs) == cp.right &&
                replace_at(cp.peak, cp.position, inner->apply(trs[cp.inner].rhs)) == cp.left &&
                !(cp.outer == cp.inner && cp.position.is_root()) &&
                (cp.kind == OverlapKind::Overlay) == cp.position.is_root();
      if (!ok) {
        ++discrepancies;
        ADD_FAILURE() << "unsound pair " << to_string(cp) << " of\n" << to_string(trs);
      }
    }
    // Completeness: every ground peak instantiates a reported pair.
    for (const Peak& peak : ground_peaks(trs, universe)) {
      bool covered = false;
      for (const CriticalPair& cp : cps)
        if ((cp.kind == OverlapKind::Overlay) == peak.overlay &&
            match(make_tuple({cp.left, cp.right}), make_tuple({peak.left, peak.right})))
          covered = true;
      if (!covered) {
        ++discrepancies;
        ADD_FAILURE() << "peak <" << peak.left << ", " << peak.right << "> not covered in\n"
                      << to_string(trs);
      }
    }
  }
  EXPECT_EQ(discrepancies, 0);
  EXPECT_GT(with_pairs, kInstances / 4);
}

// Congruence closure against naive equational deduction.

void subterms(const Term& t, std::set<Term>& out) {
  out.insert(t);
  for (const Term& a : t.args()) subterms(a, out);
}

/// The least relation on the subterm universe closed under the axioms,
/// reflexivity, symmetry, transitivity and congruence, by fixpoint iteration.
bool deduction_entails(const std::vector<Equation>& gamma, const Term& s, const Term& t) {
  std::set<Term> pool;
  for (const Equation& e : gamma) {
    subterms(e.lhs, pool);
    subterms(e.rhs, pool);
  }
  subterms(s, pool);
  subterms(t, pool);
  std::vector<Term> u(pool.begin(), pool.end());
  const std::size_t n = u.size();
  auto id = [&](const Term& x) { return std::lower_bound(u.begin(), u.end(), x) - u.begin(); };
  std::vector<std::vector<char>> eq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) eq[i][i] = 1;
  for (const Equation& e : gamma) eq[id(e.lhs)][id(e.rhs)] = eq[id(e.rhs)][id(e.lhs)] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (eq[i][j]) continue;
        bool derived = false;
        for (std::size_t k = 0; k < n && !derived; ++k) derived = eq[i][k] && eq[k][j];
        const Term& a = u[i];
        const Term& b = u[j];
        if (!derived && !a.is_variable() && !b.is_variable() && a.name() == b.name() &&
            a.arity() == b.arity()) {
          derived = true;
          for (std::size_t k = 0; k < a.arity(); ++k) derived = derived && eq[id(a.arg(k))][id(b.arg(k))];
        }
        if (derived) {
          eq[i][j] = eq[j][i] = 1;
          changed = true;
        }
      }
  }
  return eq[id(s)][id(t)];
}

/// Breadth-first replacement of equation sides, bounded by term size.
bool replacement_reaches(const std::vector<Equation>& gamma, const Term& s, const Term& t,
                         std::size_t size_cap) {
  std::set<Term> seen{s};
  std::queue<Term> todo;
  todo.push(s);
  while (!todo.empty()) {
    Term cur = todo.front();
    todo.pop();
    if (cur == t) return true;
    for (const Position& p : positions(cur))
      for (const Equation& e : gamma)
        for (const auto& [from, to] : {std::pair{e.lhs, e.rhs}, std::pair{e.rhs, e.lhs}}) {
          if (subterm_at(cur, p) != from) continue;
          Term next = replace_at(cur, p, to);
          if (next.size() <= size_cap && seen.insert(next).second) todo.push(next);
        }
  }
  return false;
}

TEST(Oracle, CongruenceClosureAgreesWithDeduction) {
  std::mt19937 rng(2002);
  unc::testing::TermGen gen(rng, {{"f", 2}, {"g", 1}, {"a", 0}, {"b", 0}, {"c", 0}}, {"x"});
  int discrepancies = 0;
  int positives = 0;
  int queries = 0;
  for (int n = 0; n < kInstances; ++n) {
    std::vector<Equation> gamma;
    std::size_t count = 1 + gen.below(4);
    for (std::size_t k = 0; k < count; ++k) gamma.push_back({gen.term(2, 0.2), gen.term(1, 0.2)});
    std::set<Term> pool;
    for (const Equation& e : gamma) {
      subterms(e.lhs, pool);
      subterms(e.rhs, pool);
    }
    std::vector<Term> candidates(pool.begin(), pool.end());
    for (int q = 0; q < 4; ++q) {
      Term s = gen.chance(0.7) ? gen.pick(candidates) : gen.term(2, 0.2);
      Term t = gen.chance(0.7) ? gen.pick(candidates) : gen.term(2, 0.2);
      // Lift some queries under a common context.
      if (gen.chance(0.3)) {
        s = Term::apply("g", {s});
        t = Term::apply("g", {t});
      }
      ++queries;
      bool cc = cc_entails(gamma, s, t);
      bool oracle = deduction_entails(gamma, s, t);
      if (oracle) ++positives;
      if (cc != oracle) {
        ++discrepancies;
        ADD_FAILURE() << s << " = " << t << " under " << to_string(gamma) << ": cc " << cc;
      }
      // Any equational proof by replacement is also found by the closure.
      if (replacement_reaches(gamma, s, t, 9) && !cc) {
        ++discrepancies;
        ADD_FAILURE() << "replacement proof missed: " << s << " = " << t << " under " << to_string(gamma);
      }
    }
  }
  EXPECT_EQ(discrepancies, 0);
  EXPECT_GT(positives, queries / 5);
  EXPECT_LT(positives, queries);
}

// SIM0 against derivation trees of the ranked equality calculus.

/// Closure of `seed` under replacing occurrences of equation sides by the
/// other side at most `rounds` times, plus all subterms.
std::set<Term> replacement_universe(const std::vector<Equation>& gamma, const Term& seed, std::size_t rounds) {
  std::set<Term> layer{seed};
  std::set<Term> all{seed};
  for (std::size_t r = 0; r < rounds; ++r) {
    std::set<Term> next;
    for (const Term& cur : layer)
      for (const Position& p : positions(cur))
        for (const Equation& e : gamma) {
          if (subterm_at(cur, p) == e.lhs) next.insert(replace_at(cur, p, e.rhs));
          if (subterm_at(cur, p) == e.rhs) next.insert(replace_at(cur, p, e.lhs));
        }
    for (const Term& t : next) all.insert(t);
    layer = std::move(next);
  }
  std::set<Term> out;
  for (const Term& t : all) subterms(t, out);
  for (const Equation& e : gamma) {
    subterms(e.lhs, out);
    subterms(e.rhs, out);
  }
  return out;
}

/// Judgements Δ ⊩ u ∼ v (Δ as a bit mask over Γ) derivable by asp, refl,
/// sym, trans and cntxt with all terms inside the universe.
std::set<SimState> naive_sim0(const std::vector<Equation>& gamma, const Term& s) {
  const std::set<Term> universe = replacement_universe(gamma, s, gamma.size());
  using Judgement = std::tuple<unsigned, Term, Term>;
  std::set<Judgement> known;
  std::map<Term, std::vector<std::pair<unsigned, Term>>> by_left;
  std::map<Term, std::vector<std::pair<unsigned, Term>>> by_right;
  std::vector<Judgement> todo;
  auto add = [&](unsigned mask, const Term& u, const Term& v) {
    if (!known.insert({mask, u, v}).second) return;
    by_left[u].push_back({mask, v});
    by_right[v].push_back({mask, u});
    todo.push_back({mask, u, v});
  };
  for (const Term& u : universe) add(0, u, u);
  for (unsigned i = 0; i < gamma.size(); ++i) add(1u << i, gamma[i].lhs, gamma[i].rhs);
  while (!todo.empty()) {
    auto [mask, u, v] = todo.back();
    todo.pop_back();
    add(mask, v, u);
    // Copies: `add` may grow the indexed vectors.
    for (auto [m2, w] : std::vector(by_left[v]))
      if (!(mask & m2)) add(mask | m2, u, w);
    for (auto [m2, w] : std::vector(by_right[u]))
      if (!(mask & m2)) add(mask | m2, w, v);
    for (const Term& w : universe)
      for (const Position& p : positions(w)) {
        if (p.is_root() || subterm_at(w, p) != u) continue;
        Term w2 = replace_at(w, p, v);
        if (universe.count(w2)) add(mask, w, w2);
      }
  }
  std::set<SimState> out;
  for (const auto& [mask, u, v] : known) {
    if (u != s) continue;
    SimState st{{}, v};
    for (unsigned i = 0; i < gamma.size(); ++i)
      if (!(mask & (1u << i))) st.remaining.push_back(gamma[i]);
    out.insert(st);
  }
  return out;
}

/// States with Σ sorted, so equal multisets compare equal.
std::set<SimState> as_multisets(const std::set<SimState>& states) {
  std::set<SimState> out;
  for (SimState st : states) {
    std::sort(st.remaining.begin(), st.remaining.end());
    out.insert(std::move(st));
  }
  return out;
}

TEST(Oracle, Sim0AgreesWithDerivationTrees) {
  std::mt19937 rng(3003);
  unc::testing::TermGen gen(rng, {{"f", 2}, {"g", 1}, {"a", 0}, {"b", 0}}, {"x", "y"});
  int discrepancies = 0;
  std::size_t largest = 0;
  for (int n = 0; n < kInstances; ++n) {
    std::vector<Equation> gamma;
    std::size_t count = gen.below(4);
    for (std::size_t k = 0; k < count; ++k) gamma.push_back({gen.term(1, 0.5), gen.term(1, 0.5)});
    // Repeated equations exercise the multiset accounting.
    if (!gamma.empty() && gen.chance(0.15)) gamma.push_back(gamma.front());
    if (gamma.size() > 3) gamma.pop_back();
    Term s = gen.term(2, 0.4);
    std::set<SimState> raw = sim0(gamma, s);
    std::set<SimState> got = as_multisets(raw);
    // Each remainder multiset is reported once.
    if (raw.size() != got.size()) {
      ++discrepancies;
      ADD_FAILURE() << "duplicate remainders in sim0(" << to_string(gamma) << ", " << s << ")";
    }
    std::set<SimState> want = as_multisets(naive_sim0(gamma, s));
    largest = std::max(largest, got.size());
    if (got != want) {
      ++discrepancies;
      std::string diff;
      for (const SimState& st : got)
        if (!want.count(st)) diff += "  extra " + to_string(st) + "\n";
      for (const SimState& st : want)
        if (!got.count(st)) diff += "  missing " + to_string(st) + "\n";
      ADD_FAILURE() << "sim0(" << to_string(gamma) << ", " << s << ")\n" << diff;
    }
  }
  EXPECT_EQ(discrepancies, 0);
  EXPECT_GT(largest, 5u);
}

}  // namespace
