#include <doctest.h>

#include "glue/error.hpp"
#include "glue/parse.hpp"
#include "glue/signature.hpp"
#include "glue/term.hpp"
#include "glue/type.hpp"

using namespace glue;

namespace {

Signature small_signature() {
  Signature sig = builtin_signature();
  for (const char* s : {"book", "phys", "I", "ani", "dog"}) sig.add_sort(s);
  sig.add_constant("sleeps", parse_type("(-> e:ani t)", sig));
  return sig;
}

}  // namespace

TEST_SUITE("syntax") {
  TEST_CASE("parse_type base and arrows") {
    CHECK(alpha_eq(parse_type("t"), Type::prop()));
    Type q = parse_type("(all a (-> (-> a t) t))");
    REQUIRE(q.is<Type::Forall>());
    CHECK(alpha_eq(q, Type::forall("b", arrows({Type::arrow(Type::var("b"), Type::prop())}, Type::prop()))));
    CHECK(alpha_eq(parse_type("(-> e:book e:phys)"), Type::arrow(Type::entity("book"), Type::entity("phys"))));
  }

  TEST_CASE("parse_type errors carry locations") {
    try {
      parse_type("(-> t\n  (foo))");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_type("(-> t"), SyntaxError);
    CHECK_THROWS_AS(parse_type("(-> t t t)"), SyntaxError);
    CHECK_THROWS_AS(parse_type("T"), SyntaxError);
    CHECK_THROWS_AS(parse_type("e:unicorn", small_signature()), UnknownSort);
  }

  TEST_CASE("set types need the finset extension") {
    CHECK_NOTHROW(parse_type("(set e:book)"));
    CHECK_THROWS_AS(parse_type("(set e:book)", small_signature()), SyntaxError);
  }

  TEST_CASE("parse_term builds annotated terms") {
    Signature sig = small_signature();
    Term sleeps = parse_term("(lam (x e:ani) (app sleeps x))", sig);
    const auto& lam = sleeps.as<Term::Lam>();
    CHECK(lam.binder == "x");
    CHECK(alpha_eq(lam.binder_type, Type::entity("ani")));
    const auto& app = lam.body.as<Term::App>();
    CHECK(app.fn.as<Term::Const>().name == "sleeps");
    CHECK(app.arg.as<Term::Var>().name == "x");

    Term id = parse_term("(tlam a (lam (x a) x))", sig);
    CHECK(alpha_eq(id, Term::ty_lam("b", Term::lam("y", Type::var("b"), Term::var("y")))));
  }

  TEST_CASE("the polymorphic and term has six binders") {
    Term and_term = parse_term(
        "(tlam a (tlam b (lam (P (-> a t)) (lam (Q (-> b t)) (tlam x (lam (y x) (lam (f (-> x a)) "
        "(lam (g (-> x b)) (app (app ∧ (app P (app f y))) (app Q (app g y)))))))))))",
        builtin_signature());
    CHECK(alpha_eq(and_term, polymorphic_and_term()));
  }

  TEST_CASE("aliases resolve to canonical constants") {
    Signature sig = builtin_signature();
    CHECK(alpha_eq(parse_term("and", sig), parse_term("∧", sig)));
    CHECK(parse_term("forall", sig).as<Term::Const>().name == names::kForall);
  }

  TEST_CASE("unknown names") {
    Signature sig = builtin_signature();
    CHECK_THROWS_AS(parse_term("(app mystery x)", sig), UnknownConstant);
    Term free = parse_term("(app mystery x)", sig, TermParseOptions{true});
    CHECK(free_vars(free) == std::set<std::string>{"mystery", "x"});
  }

  TEST_CASE("alpha_eq examples") {
    CHECK(alpha_eq(Term::lam("x", Type::prop(), Term::var("x")), Term::lam("y", Type::prop(), Term::var("y"))));
    CHECK(alpha_eq(parse_type("(all a (-> a a))"), parse_type("(all b (-> b b))")));
    CHECK_FALSE(alpha_eq(Term::lam("x", Type::entity("dog"), Term::var("x")),
                         Term::lam("x", Type::entity("phys"), Term::var("x"))));
    // Free variables are compared by name.
    CHECK_FALSE(alpha_eq(Term::lam("x", Type::prop(), Term::var("y")), Term::lam("x", Type::prop(), Term::var("z"))));
    // Binder capture: λx.λy.x vs λx.λx.x differ.
    Type t = Type::prop();
    CHECK_FALSE(alpha_eq(Term::lam("x", t, Term::lam("y", t, Term::var("x"))),
                         Term::lam("x", t, Term::lam("x", t, Term::var("x")))));
    CHECK_FALSE(alpha_eq(parse_type("(all a (all b (-> a b)))"), parse_type("(all a (all b (-> b a)))")));
  }

  TEST_CASE("printing") {
    Signature sig = small_signature();
    CHECK(print_type(parse_type("(all a (-> (-> a t) a))")) == "(all a (-> (-> a t) a))");
    CHECK(print_term(parse_term("(tapp ε e:dog)", sig)) == "(tapp ε e:dog)");
    CHECK(print_term(parse_term("(lam (x e:ani) (app sleeps x))", sig)) == "(lam (x e:ani) (app sleeps x))");
  }

  TEST_CASE("capture-avoiding type substitution") {
    // (all b (-> a b))[a := b] must rename the binder.
    Type r = substitute_type(parse_type("(all b (-> a b))"), "a", Type::var("b"));
    CHECK(alpha_eq(r, parse_type("(all c (-> b c))")));
    CHECK(free_type_vars(r) == std::set<std::string>{"b"});
  }

  TEST_CASE("term size counts every node") {
    Signature sig = small_signature();
    CHECK(term_size(parse_term("(lam (x e:ani) (app sleeps x))", sig)) == 4);
    CHECK(term_size(parse_term("(tapp ε e:dog)", sig)) == 2);
  }
}
