#include <doctest.h>

#include "glue/error.hpp"
#include "glue/inductives.hpp"
#include "glue/kernel.hpp"
#include "glue/parse.hpp"

using namespace glue;

namespace {

Signature arith() { return register_finset(register_nat(builtin_signature())); }

Term succ_step() {
  return Term::lam("k", nat_type(), Term::lam("acc", nat_type(), succ(Term::var("acc"))));
}

}  // namespace

TEST_SUITE("inductives") {
  TEST_CASE("registration") {
    Signature sig = arith();
    CHECK(sig.has_sort(names::kNatSort));
    CHECK(alpha_eq(*sig.lookup("RecN"), parse_type("(all a (-> a (-> (-> e:nat (-> a a)) (-> e:nat a))))")));
    CHECK(alpha_eq(*sig.lookup("FoldS"),
                   parse_type("(all a (all b (-> b (-> (-> a (-> b b)) (-> (set a) b)))))")));
    CHECK_THROWS_AS(register_nat(sig), SortClash);
    CHECK_THROWS_AS(register_finset(sig), SortClash);
  }

  TEST_CASE("numerals") {
    CHECK(numeral_value(numeral(0)) == std::optional<std::size_t>(0));
    CHECK(numeral_value(numeral(7)) == std::optional<std::size_t>(7));
    CHECK_FALSE(numeral_value(Term::var("n")).has_value());
  }

  TEST_CASE("RecN rules") {
    Signature sig = arith();
    // Recursion with the successor step rebuilds its argument: 3 stays 3.
    NormalForm three = normalize(rec_nat(nat_type(), zero(), succ_step(), numeral(3)), sig);
    CHECK(numeral_value(three.term) == std::optional<std::size_t>(3));
    // Base rule.
    Term base = Term::var("b");
    CHECK(alpha_eq(*contract_recursor(rec_nat(nat_type(), base, Term::var("s"), zero()), sig), base));
  }

  TEST_CASE("addition") {
    Signature sig = arith();
    Term sum = apply(nat_addition(), {numeral(2), numeral(3)});
    CHECK(alpha_eq(typecheck(sum, sig), nat_type()));
    CHECK(numeral_value(normalize(sum, sig).term) == std::optional<std::size_t>(5));
  }

  TEST_CASE("FoldS rules") {
    Signature sig = arith();
    Term empty_fold = fold_set(nat_type(), nat_type(), Term::var("b"), Term::var("s"), empty_set(nat_type()));
    CHECK(alpha_eq(*contract_recursor(empty_fold, sig), Term::var("b")));

    // Cardinality of {x, y}: FoldS z (λe.λacc. Succ acc) (InsertS x (InsertS y EmptyS)) ~> 2
    sig.add_sort("dog");
    Type dog = Type::entity("dog");
    sig.add_constant("x", dog);
    sig.add_constant("y", dog);
    Term set = insert_set(dog, Term::constant("x", dog), insert_set(dog, Term::constant("y", dog), empty_set(dog)));
    Term count = Term::lam("e", dog, Term::lam("acc", nat_type(), succ(Term::var("acc"))));
    NormalForm card = normalize(fold_set(dog, nat_type(), zero(), count, set), sig);
    CHECK(numeral_value(card.term) == std::optional<std::size_t>(2));
    // Three recursor steps (two InsertS, one EmptyS) and two β steps per element.
    CHECK(card.steps == 7);
  }

  TEST_CASE("membership fold unfolds to a disjunction") {
    Signature sig = arith();
    sig.add_sort("dog");
    Type dog = Type::entity("dog");
    sig.add_constant("rex", dog);
    sig.add_constant("fido", dog);
    sig.add_constant("isRex", Type::arrow(dog, Type::prop()));
    sig.add_constant("no", Type::prop());
    // d ∈ s as FoldS no (λd.λacc. isRex d ∨ acc) s, with a ∨ b written ¬a ⊃ b.
    Term set = insert_set(dog, Term::constant("fido", dog), insert_set(dog, Term::constant("rex", dog), empty_set(dog)));
    Term step = parse_term("(lam (d e:dog) (lam (acc t) (app (app ⊃ (app ¬ (app isRex d))) acc)))", sig);
    NormalForm nf = normalize(fold_set(dog, Type::prop(), parse_term("no", sig), step, set), sig);
    CHECK(alpha_eq(nf.term, parse_term("(app (app ⊃ (app ¬ (app isRex fido))) "
                                       "(app (app ⊃ (app ¬ (app isRex rex))) no))",
                                       sig)));
  }

  TEST_CASE("orthogonality") {
    Signature sig = arith();
    CHECK(check_orthogonality(sig.rules()).ok());
    auto rules = sig.rules();
    rules.push_back(rules.front());
    CHECK_FALSE(check_orthogonality(rules).ok());
    CHECK(check_orthogonality({}).ok());
  }
}
