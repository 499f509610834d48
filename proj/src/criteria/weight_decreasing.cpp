#include "unc/criteria/weight_decreasing.hpp"

#include <algorithm>
#include <stdexcept>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "unc/term/unify.hpp"

namespace unc {

namespace {

using Mask = std::uint64_t;
using State = std::pair<Mask, Term>;

constexpr std::size_t kMaxAssumptions = 64;

/// The ranked calculus over a fixed Γ. A mask marks the equations of Γ still
/// available. Within a group of equal equations the lowest-index ones are
/// consumed first, so every remaining multiset has exactly one mask.
class RankedCalculus {
 public:
  RankedCalculus(const Ctrs& ctrs, std::span<const Equation> gamma, const Budget& budget)
      : ctrs_(ctrs), gamma_(gamma.begin(), gamma.end()), budget_(budget) {
    if (gamma_.size() > kMaxAssumptions) throw std::length_error("too many assumptions");
    for (std::size_t i = 0; i < gamma_.size(); ++i) {
      std::size_t g = i;
      for (std::size_t j = 0; j < i; ++j)
        if (gamma_[j] == gamma_[i]) {
          g = group_of_[j];
          break;
        }
      group_of_.push_back(g);
    }
    for (const ConditionalRule& r : ctrs_.rules()) {
      RuleShape shape;
      std::vector<Term> us, vs;
      for (const Equation& e : r.conditions) {
        us.push_back(e.lhs);
        vs.push_back(e.rhs);
      }
      std::vector<Term> lv{r.lhs};
      shape.instantiable = variables_subset(make_tuple(us), r.lhs);
      shape.us = make_tuple(us);
      std::vector<Term> full{r.lhs, r.rhs};
      full.insert(full.end(), vs.begin(), vs.end());
      shape.step_pattern = make_tuple(std::move(full));
      lv.insert(lv.end(), vs.begin(), vs.end());
      shape.reduct_pattern = make_tuple(lv);
      shape.rhs_covered = variables_subset(r.rhs, shape.reduct_pattern);
      shapes_.push_back(std::move(shape));
    }
  }

  Mask full() const { return gamma_.size() == 64 ? ~Mask{0} : (Mask{1} << gamma_.size()) - 1; }
  bool truncated() const { return truncated_; }

  std::vector<Equation> remaining(Mask m) const {
    std::vector<Equation> out;
    for (std::size_t i = 0; i < gamma_.size(); ++i)
      if (m >> i & 1) out.push_back(gamma_[i]);
    return out;
  }

  const std::vector<State>& sim0(Mask mask, const Term& s) {
    auto key = std::make_pair(mask, s);
    if (auto it = sim0_cache_.find(key); it != sim0_cache_.end()) return it->second;
    std::vector<State> order{{mask, s}};
    std::set<State> seen{{mask, s}};
    for (std::size_t head = 0; head < order.size(); ++head) {
      tick();
      const auto [m, t] = order[head];
      for (const Position& p : positions(t)) {
        const Term& sub = subterm_at(t, p);
        for (std::size_t i = 0; i < gamma_.size(); ++i) {
          if (!(m >> i & 1) || !first_available(m, i)) continue;
          const Equation& e = gamma_[i];
          Mask next = m & ~(Mask{1} << i);
          auto visit = [&](const Term& replacement) {
            State st{next, replace_at(t, p, replacement)};
            if (seen.count(st)) return;
            if (seen.size() >= budget_.state_cap) {
              truncated_ = true;
              return;
            }
            seen.insert(st);
            order.push_back(std::move(st));
          };
          if (sub == e.lhs) visit(e.rhs);
          if (sub == e.rhs && e.lhs != e.rhs) visit(e.lhs);
        }
      }
    }
    return sim0_cache_.emplace(key, std::move(order)).first->second;
  }

  std::set<Mask> red1(Mask mask, const Term& s, const Term& t) {
    std::set<Mask> out;
    for (const Position& p : same_context_positions(s, t)) {
      const Term& sp = subterm_at(s, p);
      const Term& tp = subterm_at(t, p);
      for (std::size_t k = 0; k < shapes_.size(); ++k) {
        const RuleShape& shape = shapes_[k];
        if (!shape.instantiable) continue;
        auto sigma = match(ctrs_[k].lhs, sp);
        if (!sigma) continue;
        for (const auto& [m, w] : sim0(mask, sigma->apply(shape.us))) {
          std::vector<Term> subject{sp, tp};
          subject.insert(subject.end(), w.args().begin(), w.args().end());
          if (match(shape.step_pattern, make_tuple(std::move(subject)))) out.insert(m);
        }
      }
    }
    return out;
  }

  std::set<State> red1_reducts(Mask mask, const Term& s) {
    std::set<State> out;
    for (const Position& p : function_positions(s)) {
      const Term& sp = subterm_at(s, p);
      for (std::size_t k = 0; k < shapes_.size(); ++k) {
        const RuleShape& shape = shapes_[k];
        if (!shape.instantiable || !shape.rhs_covered) continue;
        auto sigma = match(ctrs_[k].lhs, sp);
        if (!sigma) continue;
        for (const auto& [m, w] : sim0(mask, sigma->apply(shape.us))) {
          std::vector<Term> subject{sp};
          subject.insert(subject.end(), w.args().begin(), w.args().end());
          auto theta = match(shape.reduct_pattern, make_tuple(std::move(subject)));
          if (theta) out.emplace(m, replace_at(s, p, theta->apply(ctrs_[k].rhs)));
        }
      }
    }
    return out;
  }

  std::set<Mask> srs010(Mask mask, const Term& s, const Term& t) {
    std::set<Mask> out;
    for (const auto& [m1, s1] : sim0(mask, s))
      for (const auto& [m2, t1] : sim0(m1, t))
        for (Mask m : red1(m2, s1, t1)) out.insert(m);
    return out;
  }

  std::set<Mask> sim1(Mask mask, const Term& s, const Term& t) {
    std::set<Mask> out = srs010(mask, s, t);
    for (Mask m : srs010(mask, t, s)) out.insert(m);
    return out;
  }

  std::set<Mask> red2(Mask mask, const Term& s, const Term& t) {
    std::set<Mask> out;
    for (const Position& p : same_context_positions(s, t)) {
      const Term& sp = subterm_at(s, p);
      const Term& tp = subterm_at(t, p);
      for (std::size_t k = 0; k < shapes_.size(); ++k) {
        const RuleShape& shape = shapes_[k];
        const ConditionalRule& rule = ctrs_[k];
        if (!shape.instantiable) continue;
        const Term lr = make_tuple({rule.lhs, rule.rhs});
        auto theta0 = match(lr, make_tuple({sp, tp}));
        if (!theta0) continue;
        const Term us = theta0->apply(shape.us);

        // Open condition variables and their candidate values.
        std::vector<Variable> open;
        for (const Equation& e : rule.conditions)
          for (const Variable& y : variables(e.rhs))
            if (!occurs(y, lr) && std::find(open.begin(), open.end(), y) == open.end())
              open.push_back(y);
        std::vector<std::set<Term>> candidates(open.size());
        for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
          const Equation& e = rule.conditions[i];
          const Term pattern = make_tuple({rule.lhs, rule.rhs, e.rhs});
          for (const auto& [m, w] : sim0(mask, us.arg(i))) {
            auto phi = match(pattern, make_tuple({sp, tp, w}));
            if (!phi) continue;
            for (std::size_t j = 0; j < open.size(); ++j)
              if (const Term* v = phi->find(open[j])) candidates[j].insert(*v);
              else if (occurs(open[j], e.rhs)) candidates[j].insert(Term::variable(open[j]));
          }
        }
        if (std::any_of(candidates.begin(), candidates.end(),
                        [](const auto& c) { return c.empty(); }))
          continue;

        std::vector<std::vector<Term>> pools;
        for (const auto& c : candidates) pools.emplace_back(c.begin(), c.end());
        std::vector<std::size_t> pick(open.size(), 0);
        std::size_t tried = 0;
        while (true) {
          tick();
          Substitution theta = *theta0;
          for (std::size_t j = 0; j < open.size(); ++j) theta.bind(open[j], pools[j][pick[j]]);
          std::vector<Term> vs;
          for (const Equation& e : rule.conditions) vs.push_back(theta.apply(e.rhs));
          for (Mask m : sim1(mask, us, make_tuple(std::move(vs)))) out.insert(m);
          if (++tried >= budget_.state_cap) {
            truncated_ = true;
            break;
          }
          std::size_t j = 0;
          while (j < pick.size() && ++pick[j] == pools[j].size()) pick[j++] = 0;
          if (j == pick.size()) break;
        }
      }
    }
    return out;
  }

  /// Γ ⊩ s →ᵢ ∘ ∼ⱼ t with i + j ≤ 2.
  std::optional<std::string> step_then_sim(Mask mask, const Term& s, const Term& t) {
    for (const auto& [m, t1] : sim0(mask, t)) {
      if (!red1(m, s, t1).empty()) return "->1 . ~0";
      if (!red2(m, s, t1).empty()) return "->2 . ~0";
    }
    for (const auto& [m, s1] : red1_reducts(mask, s))
      if (!sim1(m, s1, t).empty()) return "->1 . ~1";
    return std::nullopt;
  }

 private:
  struct RuleShape {
    bool instantiable = false;
    bool rhs_covered = false;
    Term us = make_tuple({});
    Term step_pattern = make_tuple({});
    Term reduct_pattern = make_tuple({});
  };

  bool first_available(Mask m, std::size_t i) const {
    for (std::size_t j = 0; j < i; ++j)
      if ((m >> j & 1) && group_of_[j] == group_of_[i]) return false;
    return true;
  }

  static std::vector<Position> same_context_positions(const Term& s, const Term& t) {
    std::vector<Position> out;
    for (const Position& p : function_positions(s))
      if (is_valid_position(t, p) && replace_at(s, p, subterm_at(t, p)) == t) out.push_back(p);
    return out;
  }

  void tick() {
    if (++ticks_ % 256 == 0 && budget_.expired()) throw TimeoutError();
  }

  const Ctrs& ctrs_;
  std::vector<Equation> gamma_;
  std::vector<std::size_t> group_of_;
  std::vector<RuleShape> shapes_;
  Budget budget_;
  std::map<State, std::vector<State>> sim0_cache_;
  bool truncated_ = false;
  std::size_t ticks_ = 0;
};

std::set<std::vector<Equation>> remainders(const RankedCalculus& calc, const std::set<Mask>& masks) {
  std::set<std::vector<Equation>> out;
  for (Mask m : masks) out.insert(calc.remaining(m));
  return out;
}

const Ctrs& no_rules() {
  static const Ctrs empty;
  return empty;
}

}  // namespace

std::string to_string(const SimState& state) {
  return "<" + to_string(state.remaining) + ", " + to_string(state.term) + ">";
}

std::set<SimState> sim0(std::span<const Equation> gamma, const Term& s, const Budget& budget) {
  RankedCalculus calc(no_rules(), gamma, budget);
  std::set<SimState> out;
  for (const auto& [m, t] : calc.sim0(calc.full(), s)) out.insert({calc.remaining(m), t});
  return out;
}

std::set<std::vector<Equation>> red1(const Ctrs& ctrs, std::span<const Equation> gamma,
                                     const Term& s, const Term& t, const Budget& budget) {
  RankedCalculus calc(ctrs, gamma, budget);
  return remainders(calc, calc.red1(calc.full(), s, t));
}

std::set<SimState> red1_reducts(const Ctrs& ctrs, std::span<const Equation> gamma, const Term& s,
                                const Budget& budget) {
  RankedCalculus calc(ctrs, gamma, budget);
  std::set<SimState> out;
  for (const auto& [m, t] : calc.red1_reducts(calc.full(), s)) out.insert({calc.remaining(m), t});
  return out;
}

std::set<std::vector<Equation>> srs010(const Ctrs& ctrs, std::span<const Equation> gamma,
                                       const Term& s, const Term& t, const Budget& budget) {
  RankedCalculus calc(ctrs, gamma, budget);
  return remainders(calc, calc.srs010(calc.full(), s, t));
}

std::set<std::vector<Equation>> sim1(const Ctrs& ctrs, std::span<const Equation> gamma,
                                     const Term& s, const Term& t, const Budget& budget) {
  RankedCalculus calc(ctrs, gamma, budget);
  return remainders(calc, calc.sim1(calc.full(), s, t));
}

std::set<std::vector<Equation>> red2(const Ctrs& ctrs, std::span<const Equation> gamma,
                                     const Term& s, const Term& t, const Budget& budget) {
  RankedCalculus calc(ctrs, gamma, budget);
  return remainders(calc, calc.red2(calc.full(), s, t));
}

WdVerdict wd_ccp_satisfied(const Ctrs& ctrs, std::span<const Equation> gamma, const Term& s,
                           const Term& t, const Budget& budget) {
  if (gamma.size() > kMaxAssumptions) return {false, "too many assumptions", true};
  RankedCalculus calc(ctrs, gamma, budget);
  const Mask all = calc.full();
  auto verdict = [&](std::string how) { return WdVerdict{true, std::move(how), calc.truncated()}; };

  for (const auto& [m, w] : calc.sim0(all, s))
    if (w == t) return verdict("(i) s ~0 t");
  if (!calc.sim1(all, s, t).empty()) return verdict("(i) s ~1 t");
  if (!calc.red2(all, s, t).empty()) return verdict("(ii) s ->2 t");
  if (!calc.red2(all, t, s).empty()) return verdict("(ii) t ->2 s");
  auto forth = calc.step_then_sim(all, s, t);
  if (forth) {
    auto back = calc.step_then_sim(all, t, s);
    if (back) return verdict("(iii) s " + *forth + " t and t " + *back + " s");
  }
  return {false, "", calc.truncated()};
}

CriterionReport weight_decreasing_unc(const Trs& trs, const Budget& budget) {
  CriterionReport report;
  report.criterion = "weight-decreasing joinable";
  if (!trs.non_duplicating()) {
    report.failure = "duplicating";
    return report;
  }
  const Ctrs lrs = lr_separated_linearize(trs);
  for (const ConditionalCriticalPair& ccp : conditional_critical_pairs(lrs)) {
    std::string pair = "<" + to_string(ccp.left) + ", " + to_string(ccp.right) + ">";
    if (!ccp.gamma.empty()) pair = to_string(ccp.gamma) + " => " + pair;
    WdVerdict v = wd_ccp_satisfied(lrs, ccp.gamma, ccp.left, ccp.right, budget);
    report.truncated = report.truncated || v.truncated;
    if (!v.holds) {
      report.failure = "not closed: " + pair;
      return report;
    }
    report.closures.push_back({pair, v.how, {}});
  }
  report.holds = true;
  return report;
}

}  // namespace unc
