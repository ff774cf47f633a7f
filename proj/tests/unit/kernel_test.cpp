#include <doctest.h>

#include "glue/error.hpp"
#include "glue/kernel.hpp"
#include "glue/parse.hpp"
#include "glue/signature.hpp"

using namespace glue;

namespace {

Signature sig_with(std::initializer_list<const char*> sorts, std::initializer_list<std::pair<const char*, const char*>> consts) {
  Signature sig = builtin_signature();
  for (const char* s : sorts) sig.add_sort(s);
  for (const auto& [name, type] : consts) sig.add_constant(name, parse_type(type, sig));
  return sig;
}

Signature book_sig() {
  return sig_with({"book", "phys", "I", "dog", "chair"}, {{"b", "e:book"},
                                                          {"f0", "(-> e:book e:I)"},
                                                          {"g0", "(-> e:book e:phys)"},
                                                          {"heavy", "(-> e:phys t)"},
                                                          {"interesting", "(-> e:I t)"},
                                                          {"barks", "(-> e:dog t)"},
                                                          {"chairObj", "e:chair"},
                                                          {"p", "t"},
                                                          {"q", "t"}});
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("and term typechecks to the six-binder type") {
    Type expected = parse_type(
        "(all a (all b (-> (-> a t) (-> (-> b t) (all x (-> x (-> (-> x a) (-> (-> x b) t))))))))");
    CHECK(alpha_eq(typecheck(polymorphic_and_term(), builtin_signature()), expected));
    CHECK(alpha_eq(*builtin_signature().lookup("AND"), expected));
  }

  TEST_CASE("identity and builtin types") {
    Signature sig = builtin_signature();
    CHECK(alpha_eq(typecheck(parse_term("(tlam a (lam (x a) x))", sig), sig), parse_type("(all a (-> a a))")));
    CHECK(alpha_eq(*sig.lookup("ε"), parse_type("(all a (-> (-> a t) a))")));
    CHECK(alpha_eq(*sig.lookup("∧"), parse_type("(-> t (-> t t))")));
    CHECK(alpha_eq(*sig.lookup("∃"), parse_type("(all a (-> (-> a t) t))")));
  }

  TEST_CASE("mismatch reports the path") {
    Signature sig = book_sig();
    try {
      typecheck(parse_term("(app barks chairObj)", sig), sig);
      FAIL("expected TypeError");
    } catch (const TypeError& e) {
      CHECK(e.kind() == TypeError::Kind::TypeMismatch);
      CHECK(e.expected() == "e:dog");
      CHECK(e.found() == "e:chair");
      CHECK(e.path_string() == "root.arg");
    }
  }

  TEST_CASE("unbound variables and ill-formed types") {
    Signature sig = book_sig();
    try {
      typecheck(Term::var("x"), sig);
      FAIL("expected TypeError");
    } catch (const TypeError& e) {
      CHECK(e.kind() == TypeError::Kind::UnboundVariable);
    }
    try {
      typecheck(Term::lam("x", Type::var("a"), Term::var("x")), sig);
      FAIL("expected TypeError");
    } catch (const TypeError& e) {
      CHECK(e.kind() == TypeError::Kind::IllFormedType);
    }
    try {
      typecheck(Term::constant("b", Type::entity("phys")), sig);
      FAIL("expected TypeError");
    } catch (const TypeError& e) {
      CHECK(e.kind() == TypeError::Kind::TypeMismatch);
    }
  }

  TEST_CASE("substitution") {
    Type t = Type::prop();
    Term id = Term::lam("x", t, Term::var("x"));
    CHECK(alpha_eq(substitute(id, "x", Term::var("c")), id));
    TypingContext ctx;
    Term px = Term::app(Term::var("P"), Term::var("x"));
    Term fy = Term::app(Term::var("f"), Term::var("y"));
    CHECK(alpha_eq(substitute(px, "x", fy), Term::app(Term::var("P"), fy)));
    Term captured = substitute(Term::lam("y", t, Term::var("x")), "x", Term::var("y"));
    const auto& lam = captured.as<Term::Lam>();
    CHECK(lam.binder == "y'");
    CHECK(lam.body.as<Term::Var>().name == "y");
  }

  TEST_CASE("type substitution renames term-level type binders") {
    Term m = Term::ty_lam("b", Term::lam("x", Type::arrow(Type::var("a"), Type::var("b")), Term::var("x")));
    Term r = substitute_ty(m, "a", Type::var("b"));
    CHECK(alpha_eq(r, Term::ty_lam("c", Term::lam("x", Type::arrow(Type::var("b"), Type::var("c")), Term::var("x")))));
  }

  TEST_CASE("normalize one β step") {
    Signature sig = book_sig();
    Term m = parse_term("(app (lam (x t) x) (app (app ∧ p) q))", sig);
    NormalForm nf = normalize(m, sig);
    CHECK(alpha_eq(nf.term, parse_term("(app (app ∧ p) q)", sig)));
    CHECK(nf.beta_normal);
    CHECK(nf.steps == 1);
  }

  TEST_CASE("book instance of AND reduces to the copredication formula") {
    // AND [phys] [I] heavy interesting [book] b g0 f0
    //   unfold AND, then three type-β steps (a:=phys, b:=I, x:=book)
    //   and five β steps (P, Q, y, f, g):
    //   ∧ (heavy (g0 b)) (interesting (f0 b))
    Signature sig = book_sig();
    Term m = parse_term(
        "(app (app (app (tapp (app (app (tapp (tapp AND e:phys) e:I) heavy) interesting) e:book) b) g0) f0)", sig);
    CHECK(typecheck(m, sig).is_prop());
    NormalForm nf = normalize(unfold_definitions(m, sig), sig);
    CHECK(alpha_eq(nf.term, parse_term("(app (app ∧ (app heavy (app g0 b))) (app interesting (app f0 b)))", sig)));
    CHECK(nf.steps == 8);
  }

  TEST_CASE("constants stay opaque without unfolding") {
    Signature sig = book_sig();
    Term m = parse_term("(tapp (tapp AND e:phys) e:I)", sig);
    CHECK(alpha_eq(normalize(m, sig).term, m));
  }

  TEST_CASE("reduce_once") {
    Signature sig = book_sig();
    CHECK_FALSE(reduce_once(parse_term("p", sig), sig, Strategy::LeftmostOutermost).has_value());
    Term single = parse_term("(app (lam (x t) x) p)", sig);
    for (Strategy s : {Strategy::LeftmostOutermost, Strategy::RightmostInnermost})
      CHECK(alpha_eq(*reduce_once(single, sig, s), parse_term("p", sig)));

    // (λx. x) ((λy. y) p): outermost contracts the outer redex, innermost the argument.
    Term nested = parse_term("(app (lam (x t) x) (app (lam (y t) y) p))", sig);
    CHECK(alpha_eq(*reduce_once(nested, sig, Strategy::LeftmostOutermost), parse_term("(app (lam (y t) y) p)", sig)));
    CHECK(alpha_eq(*reduce_once(nested, sig, Strategy::RightmostInnermost), parse_term("(app (lam (x t) x) p)", sig)));
  }

  TEST_CASE("fuel exhaustion is reported") {
    Signature sig = book_sig();
    Term m = parse_term("(app (lam (x t) x) (app (lam (y t) y) p))", sig);
    CHECK_THROWS_AS(normalize(m, sig, 1), FuelExhausted);
    CHECK_NOTHROW(normalize(m, sig, 2));
  }

  TEST_CASE("eta expansion") {
    Signature sig = book_sig();
    NormalForm barks = eta_expand(parse_term("barks", sig), sig);
    CHECK(alpha_eq(barks.term, parse_term("(lam (x e:dog) (app barks x))", sig)));
    CHECK(barks.eta_long);
    CHECK(alpha_eq(eta_expand(barks.term, sig).term, barks.term));

    NormalForm every = eta_expand(parse_term("(app (tapp ∀ e:dog) barks)", sig), sig);
    CHECK(alpha_eq(every.term, parse_term("(app (tapp ∀ e:dog) (lam (x e:dog) (app barks x)))", sig)));

    // Polymorphic constants expand under Λ.
    NormalForm eps = eta_expand(parse_term("ε", sig), sig);
    CHECK(alpha_eq(eps.term, parse_term("(tlam a (lam (P (-> a t)) (app (tapp ε a) (lam (x a) (app P x)))))", sig)));
    CHECK(is_eta_long(eps.term, sig));
    CHECK_FALSE(is_eta_long(parse_term("(app (tapp ∀ e:dog) barks)", sig), sig));
  }

  TEST_CASE("context lookup prefers the innermost binding") {
    TypingContext ctx = TypingContext{}.with_var("x", Type::prop()).with_var("x", Type::entity("dog"));
    CHECK(alpha_eq(*ctx.lookup("x"), Type::entity("dog")));
    CHECK_FALSE(ctx.lookup("y").has_value());
  }
}
