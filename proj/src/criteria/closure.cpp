#include "unc/criteria/closure.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unc/ctrs/congruence.hpp"
#include "unc/term/unify.hpp"
#include "unc/trs/rewrite.hpp"

namespace unc {

namespace {

using RedexSet = std::vector<std::pair<Position, std::size_t>>;

std::string describe(const RedexSet& redexes) {
  if (redexes.empty()) return "no step";
  std::string out;
  for (std::size_t i = 0; i < redexes.size(); ++i) {
    if (i) out += ", ";
    out += "rule " + std::to_string(redexes[i].second + 1) + " at " + to_string(redexes[i].first);
  }
  return out;
}

std::string describe(const Trace& trace) {
  if (trace.steps().empty()) return "no step";
  std::string out;
  for (std::size_t i = 0; i < trace.steps().size(); ++i) {
    const TraceStep& s = trace.steps()[i];
    if (i) out += ", ";
    out += "rule " + std::to_string(s.rule + 1) + " at " + to_string(s.position);
  }
  return out;
}

void add_rules(std::vector<std::size_t>& out, const RedexSet& redexes) {
  for (const auto& [p, r] : redexes) out.push_back(r);
}

void add_rules(std::vector<std::size_t>& out, const Trace& trace) {
  for (const TraceStep& s : trace.steps()) out.push_back(s.rule);
}

/// Rewriting with a CTRS where rule conditions are discharged by congruence
/// closure over a fixed assumption set Γ.
class ConditionalRewriter {
 public:
  ConditionalRewriter(const Ctrs& ctrs, std::span<const Equation> gamma)
      : ctrs_(ctrs), cc_(gamma) {}

  std::optional<Substitution> redex(std::size_t rule, const Term& t) {
    const ConditionalRule& r = ctrs_[rule];
    auto theta = match(r.lhs, t);
    if (!theta) return std::nullopt;
    // Conditions with variables outside the lhs cannot be instantiated.
    if (!r.type1()) return std::nullopt;
    for (const Equation& e : r.conditions)
      if (!cc_.equivalent(theta->apply(e.lhs), theta->apply(e.rhs))) return std::nullopt;
    return theta;
  }

  std::vector<RewriteStep> steps(const Term& t) {
    std::vector<RewriteStep> out;
    for (const Position& p : function_positions(t))
      for (std::size_t i = 0; i < ctrs_.size(); ++i)
        if (auto theta = redex(i, subterm_at(t, p)))
          out.push_back({p, i, replace_at(t, p, theta->apply(ctrs_[i].rhs))});
    return out;
  }

  /// Parallel reducts with one witnessing redex set each.
  std::map<Term, RedexSet> parallel(const Term& t) {
    std::map<Term, RedexSet> out;
    if (t.is_variable()) {
      out.emplace(t, RedexSet{});
      return out;
    }
    std::vector<std::vector<std::pair<Term, RedexSet>>> choices;
    for (std::size_t i = 0; i < t.arity(); ++i) {
      auto& c = choices.emplace_back();
      for (auto& [w, set] : parallel(t.arg(i))) {
        RedexSet shifted;
        for (const auto& [p, r] : set) shifted.emplace_back(Position({i + 1}).concat(p), r);
        c.emplace_back(w, std::move(shifted));
      }
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      std::vector<Term> args;
      RedexSet set;
      for (std::size_t i = 0; i < choices.size(); ++i) {
        args.push_back(choices[i][pick[i]].first);
        const RedexSet& s = choices[i][pick[i]].second;
        set.insert(set.end(), s.begin(), s.end());
      }
      out.emplace(Term::apply(t.name(), std::move(args)), std::move(set));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
    for (std::size_t i = 0; i < ctrs_.size(); ++i)
      if (auto theta = redex(i, t)) out.emplace(theta->apply(ctrs_[i].rhs), RedexSet{{Position(), i}});
    return out;
  }

 private:
  const Ctrs& ctrs_;
  CongruenceClosure cc_;
};

/// Bounded breadth-first →* search under a conditional rewriter.
class ConditionalReach {
 public:
  ConditionalReach(ConditionalRewriter& rw, const Term& start, const Budget& budget) {
    order_.push_back(start);
    parent_.push_back(-1);
    step_.push_back({});
    depth_.push_back(0);
    index_.emplace(start, 0);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      if (depth_[head] >= budget.conversion_depth) continue;
      if (budget.expired()) throw TimeoutError();
      Term cur = order_[head];
      for (const RewriteStep& s : rw.steps(cur)) {
        if (s.result.size() > budget.size_cap || order_.size() >= budget.state_cap) {
          truncated = true;
          continue;
        }
        if (!index_.emplace(s.result, order_.size()).second) continue;
        order_.push_back(s.result);
        parent_.push_back(static_cast<long>(head));
        step_.push_back({{s.position, s.rule}});
        depth_.push_back(depth_[head] + 1);
      }
    }
  }

  const std::vector<Term>& terms() const { return order_; }
  bool contains(const Term& t) const { return index_.count(t) > 0; }
  RedexSet path_to(const Term& t) const {
    RedexSet rev;
    long i = static_cast<long>(index_.at(t));
    while (parent_[i] >= 0) {
      rev.push_back(step_[i].front());
      i = parent_[i];
    }
    return RedexSet(rev.rbegin(), rev.rend());
  }

  bool truncated = false;

 private:
  std::vector<Term> order_;
  std::vector<long> parent_;
  std::vector<RedexSet> step_;
  std::vector<unsigned> depth_;
  std::unordered_map<Term, std::size_t> index_;
};

std::string pair_text(const std::vector<Equation>& gamma, const Term& u, const Term& v) {
  std::string out = "<" + to_string(u) + ", " + to_string(v) + ">";
  if (!gamma.empty()) out = to_string(gamma) + " => " + out;
  return out;
}

}  // namespace

CriterionReport parallel_closed_check(const Ctrs& ctrs, const Budget& budget) {
  CriterionReport report;
  report.criterion = "parallel-closed (conditional)";
  if (!ctrs.left_linear() || !ctrs.type1()) {
    report.failure = "not a left-linear type 1 CTRS";
    return report;
  }
  for (const ConditionalCriticalPair& ccp : conditional_critical_pairs(ctrs)) {
    ConditionalRewriter rw(ctrs, ccp.gamma);
    auto par = rw.parallel(ccp.left);
    PairClosure closure;
    closure.pair = pair_text(ccp.gamma, ccp.left, ccp.right);
    bool closed = false;
    if (ccp.kind == OverlapKind::InnerOuter) {
      if (auto it = par.find(ccp.right); it != par.end()) {
        closure.justification = "u => v by " + describe(it->second);
        add_rules(closure.rules, it->second);
        closed = true;
      }
    } else {
      ConditionalReach from_v(rw, ccp.right, budget);
      for (const Term& w : from_v.terms()) {
        auto it = par.find(w);
        if (it == par.end()) continue;
        RedexSet back = from_v.path_to(w);
        closure.justification = "u => " + to_string(w) + " by " + describe(it->second) +
                                "; v ->* " + to_string(w) + " by " + describe(back);
        add_rules(closure.rules, it->second);
        add_rules(closure.rules, back);
        closed = true;
        break;
      }
      report.truncated = report.truncated || from_v.truncated;
    }
    if (!closed) {
      report.failure = "not closed: " + closure.pair;
      return report;
    }
    report.closures.push_back(std::move(closure));
  }
  report.holds = true;
  return report;
}

CriterionReport strongly_closed_check(const Ctrs& ctrs, const Budget& budget) {
  CriterionReport report;
  report.criterion = "strongly closed (conditional)";
  if (!ctrs.linear()) {
    report.failure = "not a linear CTRS";
    return report;
  }
  for (const ConditionalCriticalPair& ccp : conditional_critical_pairs(ctrs)) {
    ConditionalRewriter rw(ctrs, ccp.gamma);
    PairClosure closure;
    closure.pair = pair_text(ccp.gamma, ccp.left, ccp.right);
    ConditionalReach from_u(rw, ccp.left, budget);
    ConditionalReach from_v(rw, ccp.right, budget);
    report.truncated = report.truncated || from_u.truncated || from_v.truncated;

    // u →* w =← v
    std::optional<std::string> first;
    std::map<Term, RedexSet> v_once{{ccp.right, {}}};
    for (const RewriteStep& s : rw.steps(ccp.right)) v_once.emplace(s.result, RedexSet{{s.position, s.rule}});
    for (const Term& w : from_u.terms()) {
      auto it = v_once.find(w);
      if (it == v_once.end()) continue;
      RedexSet path = from_u.path_to(w);
      first = "u ->* " + to_string(w) + " by " + describe(path) + ", v ->= by " + describe(it->second);
      add_rules(closure.rules, path);
      add_rules(closure.rules, it->second);
      break;
    }
    // u →= w *← v
    std::optional<std::string> second;
    std::vector<std::pair<Term, RedexSet>> u_once{{ccp.left, {}}};
    for (const RewriteStep& s : rw.steps(ccp.left)) u_once.push_back({s.result, {{s.position, s.rule}}});
    for (const auto& [w, step] : u_once) {
      if (!from_v.contains(w)) continue;
      RedexSet path = from_v.path_to(w);
      second = "u ->= " + to_string(w) + " by " + describe(step) + ", v ->* by " + describe(path);
      add_rules(closure.rules, step);
      add_rules(closure.rules, path);
      break;
    }
    if (!first || !second) {
      report.failure = "not closed: " + closure.pair;
      return report;
    }
    closure.justification = *first + "; " + *second;
    report.closures.push_back(std::move(closure));
  }
  report.holds = true;
  return report;
}

CriterionReport parallel_closed(const Trs& trs, const Budget& budget) {
  CriterionReport report;
  report.criterion = "parallel-closed";
  if (!trs.left_linear()) {
    report.failure = "not left-linear";
    return report;
  }
  for (const CriticalPair& cp : critical_pairs(trs)) {
    std::set<Term> par = parallel_step_reducts(trs, cp.left);
    PairClosure closure;
    closure.pair = pair_text({}, cp.left, cp.right);
    bool closed = false;
    if (cp.kind == OverlapKind::InnerOuter) {
      closed = par.count(cp.right) > 0;
      if (closed) closure.justification = "u => v";
    } else {
      Exploration from_v(trs, cp.right, budget.conversion_depth, budget, false);
      report.truncated = report.truncated || from_v.truncated();
      for (const Term& w : from_v.terms()) {
        if (!par.count(w)) continue;
        Trace back = from_v.trace_to(w);
        closure.justification = "u => " + to_string(w) + "; v ->* by " + describe(back);
        add_rules(closure.rules, back);
        closed = true;
        break;
      }
    }
    if (!closed) {
      report.failure = "not closed: " + closure.pair;
      return report;
    }
    report.closures.push_back(std::move(closure));
  }
  report.holds = true;
  return report;
}

std::optional<std::string> strongly_joinable(const Trs& trs, const Term& u, const Term& v,
                                             const Budget& budget, bool* truncated) {
  Exploration from_u(trs, u, budget.conversion_depth, budget, false);
  Exploration from_v(trs, v, budget.conversion_depth, budget, false);
  if (truncated) *truncated = *truncated || from_u.truncated() || from_v.truncated();
  std::set<Term> v_once{v};
  for (const RewriteStep& s : rewrite_steps(trs, v)) v_once.insert(s.result);
  std::optional<std::string> first;
  for (const Term& w : from_u.terms()) {
    if (!v_once.count(w)) continue;
    first = "u ->* " + to_string(w) + " by " + describe(from_u.trace_to(w)) + " <-= v";
    break;
  }
  if (!first) return std::nullopt;
  std::vector<Term> u_once{u};
  for (const RewriteStep& s : rewrite_steps(trs, u)) u_once.push_back(s.result);
  for (const Term& w : u_once) {
    if (!from_v.contains(w)) continue;
    return *first + "; u ->= " + to_string(w) + " <-* v by " + describe(from_v.trace_to(w));
  }
  return std::nullopt;
}

CriterionReport strongly_closed(const Trs& trs, const Budget& budget) {
  CriterionReport report;
  report.criterion = "strongly closed";
  if (!trs.linear()) {
    report.failure = "not linear";
    return report;
  }
  for (const CriticalPair& cp : critical_pairs(trs)) {
    bool truncated = false;
    auto how = strongly_joinable(trs, cp.left, cp.right, budget, &truncated);
    report.truncated = report.truncated || truncated;
    PairClosure closure;
    closure.pair = pair_text({}, cp.left, cp.right);
    if (!how) {
      report.failure = "not closed: " + closure.pair;
      return report;
    }
    closure.justification = *how;
    report.closures.push_back(std::move(closure));
  }
  report.holds = true;
  return report;
}

std::optional<std::string> development_joinable(const Trs& trs, const CriticalPair& cp,
                                                const Budget& budget, bool* truncated) {
  DevelopmentReducts dev = development_step_reducts(trs, cp.left, 1, budget);
  if (truncated) *truncated = *truncated || dev.truncated;
  if (cp.kind == OverlapKind::InnerOuter) {
    auto it = dev.reducts.find(cp.right);
    if (it == dev.reducts.end()) return std::nullopt;
    return "u -o-> v by " + describe(it->second);
  }
  Exploration from_v(trs, cp.right, budget.conversion_depth, budget, false);
  if (truncated) *truncated = *truncated || from_v.truncated();
  for (const Term& w : from_v.terms()) {
    auto it = dev.reducts.find(w);
    if (it == dev.reducts.end()) continue;
    return "u -o-> " + to_string(w) + " by " + describe(it->second) + "; v ->* by " +
           describe(from_v.trace_to(w));
  }
  return std::nullopt;
}

CriterionReport development_closed(const Trs& trs, const Budget& budget) {
  CriterionReport report;
  report.criterion = "development closed";
  if (!trs.left_linear()) {
    report.failure = "not left-linear";
    return report;
  }
  for (const CriticalPair& cp : critical_pairs(trs)) {
    bool truncated = false;
    auto how = development_joinable(trs, cp, budget, &truncated);
    report.truncated = report.truncated || truncated;
    PairClosure closure;
    closure.pair = pair_text({}, cp.left, cp.right);
    if (!how) {
      report.failure = "not closed: " + closure.pair;
      return report;
    }
    closure.justification = *how;
    report.closures.push_back(std::move(closure));
  }
  report.holds = true;
  return report;
}

}  // namespace unc
