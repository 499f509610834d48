#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "support.hpp"
#include "unc/criteria/basic.hpp"
#include "unc/criteria/closure.hpp"
#include "unc/criteria/weight_decreasing.hpp"
#include "unc/ctrs/ctrs.hpp"

using namespace unc;
using unc::testing::E;
using unc::testing::R;
using unc::testing::T;

namespace {

const char* kLinearizedClosed = "f(x,x,g(y)) -> h(y,x) g(a) -> f(a,b,b) h(x,y) -> h(a,y) f(x,x,y) -> h(a,x)";
const char* kWeightDecreasing = "f(x,x) -> h(x,f(x,b)) f(g(y),y) -> h(y,f(g(y),c(b))) h(c(x),b) -> h(b,b) c(b) -> b";
const char* kCops254 = "a -> f(c) a -> f(h(c)) f(x) -> h(f(x))";

Ctrs semi_equational() {
  return Ctrs({ConditionalRule(T("P(Q(x))"), T("P(R(x))"), {E("x", "A")}),
               ConditionalRule(T("Q(H(x))"), T("R(x)"), {E("S(x)", "H(x)")}),
               ConditionalRule(T("R(x)"), T("R(H(x))"), {E("S(x)", "A")})});
}

const std::vector<Equation>& overlay_gamma() {
  static const std::vector<Equation> gamma{E("y1", "y"), E("y2", "y"), E("g(y1)", "x"), E("y2", "x")};
  return gamma;
}

/// The 14 states listed for the weight-decreasing example, by labels of the remaining
/// equations (a)–(d).
std::set<SimState> listed_sim0_states() {
  const std::vector<Equation>& g = overlay_gamma();
  std::map<char, Equation> label{{'a', g[0]}, {'b', g[1]}, {'c', g[2]}, {'d', g[3]}};
  std::vector<std::pair<std::string, std::string>> rows{
      {"abcd", "h(y,f(g(y),c(b)))"}, {"bcd", "h(y1,f(g(y),c(b)))"}, {"bcd", "h(y,f(g(y1),c(b)))"},
      {"bd", "h(y,f(x,c(b)))"},      {"acd", "h(y2,f(g(y),c(b)))"}, {"acd", "h(y,f(g(y2),c(b)))"},
      {"ac", "h(x,f(g(y),c(b)))"},   {"ac", "h(y,f(g(x),c(b)))"},   {"cd", "h(y1,f(g(y2),c(b)))"},
      {"cd", "h(y2,f(g(y1),c(b)))"}, {"c", "h(y1,f(g(x),c(b)))"},   {"c", "h(x,f(g(y1),c(b)))"},
      {"d", "h(y2,f(x,c(b)))"},      {"", "h(x,f(x,c(b)))"}};
  std::set<SimState> out;
  for (const auto& [labels, term] : rows) {
    SimState s{{}, T(term)};
    for (char l : labels) s.remaining.push_back(label.at(l));
    out.insert(s);
  }
  return out;
}

TEST(StronglyNonOverlapping, Examples) {
  EXPECT_TRUE(strongly_non_overlapping(R("f(x,x) -> a g(x) -> b")));
  EXPECT_FALSE(strongly_non_overlapping(R(kCops254)));
  EXPECT_TRUE(strongly_non_overlapping(Trs()));
}

TEST(NonOmegaOverlapping, Examples) {
  EXPECT_TRUE(non_omega_overlapping(R("f(x,x) -> a")));
  Trs omega = R("f(x,x) -> a f(y,g(y)) -> b");
  EXPECT_FALSE(non_omega_overlapping(omega));
  EXPECT_FALSE(is_overlapping(omega));
  EXPECT_FALSE(non_omega_overlapping(R(kLinearizedClosed)));
}

TEST(RightReducible, Examples) {
  EXPECT_TRUE(right_reducible(R("f(f(x,y),z) -> f(f(x,z),f(y,z))")));
  EXPECT_FALSE(right_reducible(R("a -> b")));
  EXPECT_TRUE(right_reducible(R("a -> f(a) f(x) -> f(a)")));
}

bool uses_rule(const PairClosure& c, std::size_t rule) {
  return std::find(c.rules.begin(), c.rules.end(), rule) != c.rules.end();
}

TEST(ParallelClosed, LinearizedSystem) {
  CriterionReport report = parallel_closed_check(conditional_linearize(R(kLinearizedClosed)));
  ASSERT_TRUE(report.holds) << to_string(report);
  ASSERT_EQ(report.closures.size(), 3u);
  std::vector<ConditionalCriticalPair> ccps = conditional_critical_pairs(conditional_linearize(R(kLinearizedClosed)));
  ASSERT_EQ(ccps.size(), 3u);
  for (std::size_t i = 0; i < ccps.size(); ++i) {
    if (ccps[i].kind == OverlapKind::InnerOuter) {
      EXPECT_EQ(report.closures[i].rules, std::vector<std::size_t>{3});
    } else {
      EXPECT_EQ(report.closures[i].rules, std::vector<std::size_t>{2});
    }
  }
}

TEST(ParallelClosed, SemiEquational) {
  CriterionReport report = parallel_closed_check(semi_equational());
  ASSERT_TRUE(report.holds) << to_string(report);
  ASSERT_EQ(report.closures.size(), 1u);
  EXPECT_TRUE(uses_rule(report.closures[0], 2));
}

TEST(ParallelClosed, DistinctNormalForms) {
  CriterionReport report = parallel_closed_check(as_ctrs(R("a -> b a -> c")));
  EXPECT_FALSE(report.holds);
  EXPECT_FALSE(report.failure.empty());
}

TEST(ParallelClosed, RejectsNonTypeOne) {
  Ctrs c({ConditionalRule(T("f(x)"), T("y"), {E("x", "y")})});
  EXPECT_FALSE(parallel_closed_check(c).holds);
}

TEST(StronglyClosed, Examples) {
  EXPECT_TRUE(strongly_closed_check(conditional_linearize(R(kLinearizedClosed))).holds);
  EXPECT_TRUE(strongly_closed_check(as_ctrs(R("f(x) -> g(x) a -> b"))).holds);
  EXPECT_FALSE(strongly_closed_check(as_ctrs(R("a -> b a -> c"))).holds);
  CriterionReport nonlinear = strongly_closed_check(as_ctrs(R("f(x) -> g(x,x)")));
  EXPECT_FALSE(nonlinear.holds);
  EXPECT_FALSE(nonlinear.failure.empty());
}

TEST(UnconditionalClosure, Examples) {
  EXPECT_TRUE(parallel_closed(R("f(a) -> b a -> a")).holds);
  EXPECT_FALSE(parallel_closed(R("a -> b a -> c")).holds);
  EXPECT_TRUE(strongly_closed(R("a -> b a -> c b -> c")).holds);
  EXPECT_TRUE(development_closed(R("a -> a f(a) -> a h(c,a) -> b h(a,x) -> h(x,f(x))")).holds);
  EXPECT_FALSE(development_closed(R(kCops254)).holds);
}

TEST(Sim0, EmptyAssumptions) {
  EXPECT_EQ(sim0({}, T("f(x)")), (std::set<SimState>{{{}, T("f(x)")}}));
}

TEST(Sim0, EachEquationUsedOnce) {
  std::vector<Equation> gamma{E("a", "b")};
  EXPECT_EQ(sim0(gamma, T("f(a,a)")),
            (std::set<SimState>{{gamma, T("f(a,a)")}, {{}, T("f(b,a)")}, {{}, T("f(a,b)")}}));
}

TEST(Sim0, ListedStatesAreDerived) {
  std::set<SimState> result = sim0(overlay_gamma(), T("h(y,f(g(y),c(b)))"));
  for (const SimState& s : listed_sim0_states()) EXPECT_TRUE(result.count(s)) << to_string(s);
  EXPECT_TRUE(result.count(SimState{{}, T("h(x,f(x,c(b)))")}));
  for (const SimState& s : result) EXPECT_NE(s.term, T("h(x,f(x,b))"));
}

TEST(Sim0, TuplesSplitAssumptions) {
  std::vector<Equation> gamma{E("a", "b")};
  std::set<SimState> result = sim0(gamma, make_tuple({T("a"), T("a")}));
  EXPECT_EQ(result, (std::set<SimState>{{gamma, make_tuple({T("a"), T("a")})},
                                        {{}, make_tuple({T("b"), T("a")})},
                                        {{}, make_tuple({T("a"), T("b")})}}));
}

TEST(Red1, Examples) {
  Ctrs lrs = lr_separated_linearize(R(kWeightDecreasing));
  std::set<std::vector<Equation>> r = red1(lrs, {}, T("h(x,f(x,c(b)))"), T("h(x,f(x,b))"));
  EXPECT_TRUE(r.count({}));
  EXPECT_TRUE(red1(lrs, {}, T("h(b,b)"), T("h(b,b)")).empty());
  EXPECT_TRUE(red1(lrs, overlay_gamma(), T("h(y,f(g(y),c(b)))"), T("h(x,f(x,b))")).empty());

  Ctrs c({ConditionalRule(T("f(y)"), T("b"), {E("y", "a")})});
  std::vector<Equation> gamma{E("x1", "a")};
  EXPECT_EQ(red1(c, gamma, T("f(x1)"), T("b")), std::set<std::vector<Equation>>{{}});
  EXPECT_TRUE(red1(c, {}, T("f(x1)"), T("b")).empty());
}

TEST(Red1, ReductsAgreeWithRed1) {
  Ctrs lrs = lr_separated_linearize(R(kWeightDecreasing));
  std::vector<Equation> gamma{E("x", "b")};
  Term s = T("h(c(x),f(c(b),b))");
  for (const SimState& st : red1_reducts(lrs, gamma, s))
    EXPECT_TRUE(red1(lrs, gamma, s, st.term).count(st.remaining)) << to_string(st);
  EXPECT_FALSE(red1_reducts(lrs, gamma, s).empty());
}

TEST(Sim1, SeparatedOverlay) {
  Ctrs lrs = lr_separated_linearize(R(kWeightDecreasing));
  std::set<std::vector<Equation>> r = sim1(lrs, overlay_gamma(), T("h(y,f(g(y),c(b)))"), T("h(x,f(x,b))"));
  EXPECT_TRUE(r.count({}));
}

TEST(WdCcp, Examples) {
  Ctrs lrs = lr_separated_linearize(R(kWeightDecreasing));
  WdVerdict overlay = wd_ccp_satisfied(lrs, overlay_gamma(), T("h(y,f(g(y),c(b)))"), T("h(x,f(x,b))"));
  EXPECT_TRUE(overlay.holds);
  EXPECT_EQ(overlay.how, "(i) s ~1 t");
  WdVerdict trivial = wd_ccp_satisfied(lrs, {}, T("h(b,b)"), T("h(b,b)"));
  EXPECT_TRUE(trivial.holds);
  EXPECT_EQ(trivial.how, "(i) s ~0 t");
  EXPECT_FALSE(wd_ccp_satisfied(as_ctrs(R("a -> b a -> c")), {}, T("b"), T("c")).holds);
}

TEST(WdCcp, TwoStepConversion) {
  // b <- a -> c needs two steps, one in each direction.
  Ctrs c = lr_separated_linearize(R("a -> b a -> c"));
  WdVerdict v = wd_ccp_satisfied(c, {}, T("b"), T("c"));
  EXPECT_FALSE(v.holds);
  Ctrs joinable = lr_separated_linearize(R("a -> b a -> c b -> c"));
  EXPECT_TRUE(wd_ccp_satisfied(joinable, {}, T("b"), T("c")).holds);
}

TEST(WeightDecreasing, Examples) {
  CriterionReport report = weight_decreasing_unc(R(kWeightDecreasing));
  ASSERT_TRUE(report.holds) << to_string(report);
  ASSERT_EQ(report.closures.size(), 3u);
  int sim1_closed = 0;
  int sim0_closed = 0;
  for (const PairClosure& c : report.closures) {
    if (c.justification == "(i) s ~1 t") ++sim1_closed;
    if (c.justification == "(i) s ~0 t") ++sim0_closed;
  }
  EXPECT_EQ(sim1_closed, 2);
  EXPECT_EQ(sim0_closed, 1);
  EXPECT_FALSE(weight_decreasing_unc(R("f(x) -> g(x,x)")).holds);
  EXPECT_TRUE(weight_decreasing_unc(R("f(x) -> g(x) a -> b")).holds);
}

class CriteriaProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{4242};
  unc::testing::TermGen gen{rng, {{"f", 2}, {"g", 1}, {"a", 0}, {"b", 0}}, {"x", "y", "z"}};

  std::vector<Equation> random_gamma(std::size_t max_size) {
    std::vector<Equation> gamma;
    std::size_t n = gen.below(max_size + 1);
    for (std::size_t i = 0; i < n; ++i) gamma.push_back({gen.term(1, 0.6), gen.term(1, 0.6)});
    return gamma;
  }
};

TEST_F(CriteriaProperties, Sim0SymmetryAndReflexivity) {
  for (int i = 0; i < 200; ++i) {
    std::vector<Equation> gamma = random_gamma(3);
    Term s = gen.term(2, 0.5);
    std::set<SimState> from_s = sim0(gamma, s);
    EXPECT_TRUE(from_s.count(SimState{gamma, s}));
    for (const SimState& st : from_s) {
      std::set<SimState> back = sim0(gamma, st.term);
      EXPECT_TRUE(back.count(SimState{st.remaining, s})) << to_string(st);
    }
  }
}

TEST_F(CriteriaProperties, Sim0Monotone) {
  for (int i = 0; i < 200; ++i) {
    std::vector<Equation> gamma = random_gamma(2);
    std::vector<Equation> wider = gamma;
    wider.push_back({gen.term(1, 0.6), gen.term(1, 0.6)});
    Term s = gen.term(2, 0.5);
    std::set<Term> small;
    for (const SimState& st : sim0(gamma, s)) small.insert(st.term);
    std::set<Term> large;
    for (const SimState& st : sim0(wider, s)) large.insert(st.term);
    for (const Term& t : small) EXPECT_TRUE(large.count(t)) << to_string(t);
  }
}

TEST_F(CriteriaProperties, WdReflexive) {
  Ctrs lrs = lr_separated_linearize(R(kWeightDecreasing));
  for (int i = 0; i < 200; ++i) {
    Term t = gen.term(3, 0.3);
    EXPECT_TRUE(wd_ccp_satisfied(lrs, {}, t, t).holds) << to_string(t);
  }
}

TEST_F(CriteriaProperties, SyntacticOverlapImpliesOmegaOverlap) {
  for (int i = 0; i < 300; ++i) {
    std::vector<RewriteRule> rules;
    std::size_t n = 1 + gen.below(3);
    for (std::size_t k = 0; k < n; ++k) {
      Term lhs = gen.non_variable(2, 0.5);
      rules.emplace_back(lhs, gen.over(lhs, 1));
    }
    Trs trs(std::move(rules));
    if (is_overlapping(trs)) {
      EXPECT_FALSE(non_omega_overlapping(trs)) << to_string(trs);
    }
    EXPECT_EQ(strongly_non_overlapping(trs),
              conditional_critical_pairs(conditional_linearize(trs)).empty());
  }
}

}  // namespace
