#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "unc/term/signature.hpp"
#include "unc/term/substitution.hpp"
#include "unc/term/unify.hpp"

using namespace unc;
using unc::testing::T;

namespace {

Term var(const std::string& name, unsigned index = 0) { return Term::variable(name, index); }

TEST(Term, PrintsTuplesAndIndexedVariables) {
  EXPECT_EQ(to_string(T("f(x,g(a))")), "f(x,g(a))");
  EXPECT_EQ(to_string(var("x", 3)), "x_3");
  EXPECT_EQ(to_string(make_tuple({T("a"), T("x")})), "<a,x>");
  EXPECT_TRUE(is_tuple(make_tuple({T("a")})));
  EXPECT_FALSE(is_tuple(T("f(a)")));
}

TEST(Term, SizeEqualityAndOrder) {
  Term t = T("f(x,g(a))");
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t, T("f(x,g(a))"));
  EXPECT_NE(t, T("f(y,g(a))"));
  EXPECT_NE(var("x", 0), var("x", 1));
  EXPECT_TRUE(size_then_structure_less(T("a"), T("f(a)")));
  EXPECT_FALSE(size_then_structure_less(T("f(a)"), T("a")));
}

TEST(Term, Positions) {
  Term t = T("f(x,g(a))");
  std::vector<Position> all = positions(t);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_TRUE(all[0].is_root());
  EXPECT_EQ(all[3], Position({2, 1}));
  EXPECT_EQ(function_positions(t).size(), 3u);
  EXPECT_EQ(subterm_at(t, Position({2})), T("g(a)"));
  EXPECT_TRUE(is_valid_position(t, Position({2, 1})));
  EXPECT_FALSE(is_valid_position(t, Position({1, 1})));
  EXPECT_FALSE(is_valid_position(t, Position({3})));
  EXPECT_EQ(replace_at(t, Position({2, 1}), T("b")), T("f(x,g(b))"));
  EXPECT_EQ(to_string(Position({2, 1})), "2.1");
  EXPECT_TRUE(Position({1}).is_prefix_of(Position({1, 2})));
  EXPECT_TRUE(Position({1}).is_parallel_to(Position({2, 1})));
  EXPECT_FALSE(Position().is_parallel_to(Position({2})));
}

TEST(Term, VariablesAndLinearity) {
  Term t = T("f(x,g(y),x)");
  ASSERT_EQ(variables(t).size(), 2u);
  EXPECT_EQ(variables(t)[0].name, "x");
  EXPECT_EQ(occurrences(t, Variable{"x", 0}), 2u);
  EXPECT_FALSE(is_linear(t));
  EXPECT_TRUE(is_linear(T("f(x,y)")));
  EXPECT_TRUE(is_ground(T("f(a,b)")));
  EXPECT_TRUE(variables_subset(T("g(x)"), t));
  EXPECT_FALSE(variables_subset(T("g(z)"), t));
}

TEST(Signature, ArityConflictAndReservedNames) {
  Signature sig;
  sig.declare("f", 2);
  sig.declare("f", 2);
  EXPECT_THROW(sig.declare("f", 1), SignatureError);
  EXPECT_THROW(sig.declare(std::string(kHoleSymbol), 1), SignatureError);
  sig.absorb(T("g(a)"));
  EXPECT_EQ(sig.arity("g"), 1u);
  EXPECT_TRUE(sig.admits(T("f(g(a),x)")));
  EXPECT_FALSE(sig.admits(T("f(a)")));
}

TEST(Substitution, IdentityBindingsAreNotStored) {
  Substitution s;
  s.bind(Variable{"x", 0}, var("x"));
  EXPECT_TRUE(s.empty());
  s.bind(Variable{"x", 0}, T("f(y)"));
  EXPECT_EQ(s.apply(T("g(x,y)")), T("g(f(y),y)"));
  Substitution t;
  t.bind(Variable{"y", 0}, T("a"));
  EXPECT_EQ(s.then(t).apply(T("g(x,y)")), T("g(f(a),a)"));
}

TEST(Substitution, RenamingAndVariants) {
  std::vector<Term> ts{T("f(x,y)")};
  Substitution r = renaming_above(ts, 4);
  Term renamed = r.apply(ts[0]);
  for (const Variable& v : variables(renamed)) EXPECT_GT(v.index, 4u);
  EXPECT_TRUE(is_variant(ts[0], renamed));
  EXPECT_TRUE(is_variant(T("f(x,y)"), T("f(y,x)")));
  EXPECT_FALSE(is_variant(T("f(x,x)"), T("f(x,y)")));
  std::vector<Term> a{T("f(x)"), T("g(x)")};
  std::vector<Term> b{T("f(y)"), T("g(z)")};
  EXPECT_FALSE(is_variant(a, b));
  EXPECT_EQ(canonical_variant(a), canonical_variant(std::vector<Term>{T("f(z)"), T("g(z)")}));
}

TEST(Match, Examples) {
  auto s = match(T("f(x,x)"), T("f(a,a)"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->size(), 1u);
  EXPECT_EQ(*s->find(Variable{"x", 0}), T("a"));
  EXPECT_FALSE(match(T("f(x,x)"), T("f(a,b)")));

  auto self = match(T("f(f(x,y),z)"), T("f(f(x,z),f(y,z))"));
  ASSERT_TRUE(self);
  EXPECT_EQ(*self->find(Variable{"y", 0}), T("z"));
  EXPECT_EQ(*self->find(Variable{"z", 0}), T("f(y,z)"));
  EXPECT_FALSE(self->binds(Variable{"x", 0}));
}

TEST(Mgu, Examples) {
  auto s = mgu(T("x"), T("f(y)"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->apply(T("x")), T("f(y)"));
  auto t = mgu(T("g(y)"), T("g(a)"));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->size(), 1u);
  EXPECT_EQ(t->apply(T("y")), T("a"));
  EXPECT_FALSE(mgu(T("x"), T("f(x)")));
  EXPECT_FALSE(mgu(T("f(x,a)"), T("f(y,b)")));
}

TEST(RationalUnification, Examples) {
  EXPECT_TRUE(unifiable_rational(T("x"), T("f(x)")));
  EXPECT_FALSE(unifiable_rational(T("f(x,a)"), T("f(y,b)")));
  EXPECT_TRUE(unifiable_rational(T("f(x,x)"), T("f(y,g(y))")));
  EXPECT_FALSE(mgu(T("f(x,x)"), T("f(y,g(y))")));
  EXPECT_FALSE(unifiable_rational(T("f(x,x)"), T("f(a,g(y))")));
}

class TermProperties : public ::testing::Test {
 protected:
  std::mt19937 rng{20240611};
  unc::testing::TermGen gen{rng, {{"f", 2}, {"g", 1}, {"a", 0}, {"b", 0}}, {"x", "y", "z"}};
};

TEST_F(TermProperties, MatchReproducesSubject) {
  int matched = 0;
  for (int i = 0; i < 500; ++i) {
    Term p = gen.term(3);
    Term s = gen.term(3);
    // Instances of p are matched as well as random subjects.
    Substitution inst;
    for (const Variable& v : variables(p)) inst.bind(v, gen.term(2));
    for (const Term& subject : {s, inst.apply(p)}) {
      auto sigma = match(p, subject);
      if (!sigma) continue;
      ++matched;
      EXPECT_EQ(sigma->apply(p), subject);
      for (const Variable& v : sigma->domain()) EXPECT_TRUE(occurs(v, p));
    }
    EXPECT_TRUE(match(p, inst.apply(p)));
  }
  EXPECT_GT(matched, 500);
}

TEST_F(TermProperties, MguSoundIdempotentSymmetric) {
  int unified = 0;
  for (int i = 0; i < 1000; ++i) {
    Term s = gen.term(3, 0.45);
    Term t = gen.term(3, 0.45);
    auto st = mgu(s, t);
    auto ts = mgu(t, s);
    EXPECT_EQ(st.has_value(), ts.has_value()) << s << " " << t;
    if (!st) continue;
    ++unified;
    EXPECT_EQ(st->apply(s), st->apply(t));
    EXPECT_EQ(st->then(*st), *st);
    EXPECT_TRUE(unifiable_rational(s, t));
  }
  EXPECT_GT(unified, 100);
}

TEST_F(TermProperties, SubstitutionPreservesWellFormedness) {
  Signature sig;
  sig.declare("f", 2);
  sig.declare("g", 1);
  sig.declare("a", 0);
  sig.declare("b", 0);
  for (int i = 0; i < 300; ++i) {
    Term t = gen.term(3);
    Substitution s;
    for (const Variable& v : variables(t)) s.bind(v, gen.term(2));
    ASSERT_TRUE(sig.admits(t));
    EXPECT_TRUE(sig.admits(s.apply(t)));
  }
}

}  // namespace
