#include <doctest.h>

#include "fixtures.hpp"
#include "glue/composer.hpp"
#include "glue/kernel.hpp"
#include "glue/parse.hpp"
#include "glue/pipeline.hpp"

using namespace glue;
using glue::testing::read_fixture;

namespace {

const Lexicon& sentences() {
  static const Lexicon lex = load_lexicon(read_fixture("sentences.lex"));
  return lex;
}

ParseTree tree(const std::string& text) { return read_trees(text, sentences().signature).at(0); }

Operand leaf_operand(const Lexicon& lex, const std::string& word, std::size_t index) {
  const LexEntry& e = lex.entry(word);
  return Operand{e.main, e.main_type, std::make_pair(index, word)};
}

const char* kBook = "(NODE (NODE (NODE (LEAF and) (LEAF heavy)) (LEAF interesting)) (LEAF book))";
const char* kLiverpool =
    "(NODE (NODE (NODE (LEAF and) (NODE (LEAF defeated) (LEAF Chelsea))) (LEAF decided_to_build_new_docks)) "
    "(LEAF Liverpool))";
const char* kChair = "(NODE (LEAF barks) (LEAF chair))";

}  // namespace

TEST_SUITE("composer") {
  TEST_CASE("parse tree text round trip") {
    ParseTree t = tree(kBook);
    CHECK(print_tree(t) == kBook);
    CHECK(leaves(t) == std::vector<std::string>{"and", "heavy", "interesting", "book"});
    ParseTree annotated = tree("(TY (LEAF every) e:dog)");
    CHECK(print_tree(annotated) == "(TY (LEAF every) e:dog)");
    CHECK_THROWS_AS(tree("(NODE (LEAF a))"), SyntaxError);
    CHECK_THROWS_AS(tree("(BRANCH (LEAF a) (LEAF b))"), SyntaxError);
  }

  TEST_CASE("book copredication") {
    auto analyses = compose(tree(kBook), sentences());
    REQUIRE(analyses.size() == 1);
    const Analysis& a = analyses[0];
    CHECK(a.result_type.is_prop());
    CHECK(alpha_eq(typecheck(a.term, sentences().signature), a.result_type));
    Reading r = read_analysis(a, sentences().signature);
    CHECK(hol::print_formula(r.formula) == "(and (heavy (g0 b)) (interesting (f0 b)))");
    // Both transfers land on the single book occurrence.
    REQUIRE(a.used.count(3));
    const auto& uses = a.used.at(3);
    REQUIRE(uses.size() == 2);
    CHECK(uses[0].label == "g0");
    CHECK(uses[1].label == "f0");
    CHECK(a.occurrences[3] == "book");
  }

  TEST_CASE("Liverpool is blocked by rigidity") {
    Composition c = compose_with_diagnosis(tree(kLiverpool), sentences());
    CHECK(c.analyses.empty());
    CHECK(c.diagnosis.kind == Diagnosis::Kind::RigidityViolation);
    CHECK(c.diagnosis.occurrence == "Liverpool");
    CHECK(c.diagnosis.describe() == "RigidityViolation(Liverpool) at root");

    Lexicon flexible = with_rigidity(sentences(), "Liverpool", "townToClub", Rigidity::Flexible);
    auto analyses = compose(tree(kLiverpool), flexible);
    REQUIRE(analyses.size() == 1);
    CHECK(hol::print_formula(read_analysis(analyses[0], flexible.signature).formula) ==
          "(and (defeat (townToClub liv) chelsea) (buildDocks liv))");
  }

  TEST_CASE("chair does not bark") {
    Composition c = compose_with_diagnosis(tree(kChair), sentences());
    CHECK(c.analyses.empty());
    CHECK(c.diagnosis.kind == Diagnosis::Kind::NoPath);
    CHECK(c.diagnosis.describe() == "NoPath(chair, dog) at root");
    CHECK(diagnose(tree(kChair), sentences()).describe() == "NoPath(chair, dog) at root");
    CHECK(diagnose(tree(kBook), sentences()).empty());
  }

  TEST_CASE("failures deep in the tree keep their position") {
    Composition c = compose_with_diagnosis(tree("(NODE (LEAF every) (NODE (LEAF barks) (LEAF chair)))"), sentences());
    CHECK(c.diagnosis.describe() == "NoPath(chair, dog) at root.arg");
  }

  TEST_CASE("unknown words throw") {
    CHECK_THROWS_AS(compose(tree("(NODE (LEAF barks) (LEAF unicorn))"), sentences()), UnknownWord);
  }

  TEST_CASE("apply_node: graph coercion on the argument") {
    auto apps = apply_node(leaf_operand(sentences(), "barks", 0), leaf_operand(sentences(), "rex", 1), sentences());
    REQUIRE(apps.size() == 1);
    CHECK(alpha_eq(apps[0].term, parse_term("(app barks rex)", sentences().signature)));

    Operand sleeps{Term::constant("sleeps", *sentences().signature.lookup("sleeps")),
                   *sentences().signature.lookup("sleeps"), std::nullopt};
    apps = apply_node(sleeps, leaf_operand(sentences(), "rex", 1), sentences());
    REQUIRE(apps.size() == 1);
    CHECK(alpha_eq(apps[0].term, parse_term("(app sleeps (app dogIsAni rex))", sentences().signature)));
    CHECK(apps[0].used.at(1).at(0).kind == Adaptation::Kind::Coercion);
  }

  TEST_CASE("apply_node: quantifier instantiation by matching") {
    auto apps = apply_node(leaf_operand(sentences(), "every", 0), leaf_operand(sentences(), "barks", 1), sentences());
    REQUIRE(apps.size() == 1);
    CHECK(alpha_eq(apps[0].term, parse_term("(app (tapp ∀ e:dog) barks)", sentences().signature)));
    CHECK(apps[0].type.is_prop());
  }

  TEST_CASE("apply_node: exact match") {
    Signature sig = sentences().signature;
    Type tt = parse_type("(-> t t)");
    Operand fn{Term::var("P"), tt, std::nullopt};
    Operand arg{Term::var("q"), Type::prop(), std::nullopt};
    auto apps = apply_node(fn, arg, sentences());
    REQUIRE(apps.size() == 1);
    CHECK(alpha_eq(apps[0].term, Term::app(Term::var("P"), Term::var("q"))));
  }

  TEST_CASE("partial instantiation re-abstracts undetermined quantifiers") {
    auto apps = apply_node(leaf_operand(sentences(), "and", 0), leaf_operand(sentences(), "heavy", 1), sentences());
    REQUIRE(apps.size() == 1);
    CHECK(apps[0].type.is<Type::Forall>());
    CHECK(alpha_eq(apps[0].term, parse_term("(tlam b (app (tapp (tapp AND e:phys) b) heavy))", sentences().signature)));
  }

  TEST_CASE("type annotations force instantiation") {
    auto analyses = compose(tree("(NODE (TY (LEAF every) e:dog) (LEAF barks))"), sentences());
    REQUIRE(analyses.size() == 1);
    CHECK(alpha_eq(analyses[0].term, parse_term("(app (tapp ∀ e:dog) barks)", sentences().signature)));
    Composition bad = compose_with_diagnosis(tree("(NODE (TY (LEAF barks) e:dog) (LEAF rex))"), sentences());
    CHECK(bad.diagnosis.kind == Diagnosis::Kind::NotAFunction);
  }

  TEST_CASE("check_rigidity") {
    Adaptation f0{Adaptation::Kind::Transfer, "f0", Rigidity::Flexible};
    Adaptation g0{Adaptation::Kind::Transfer, "g0", Rigidity::Flexible};
    Adaptation rigid{Adaptation::Kind::Transfer, "townToClub", Rigidity::Rigid};
    CHECK(check_rigidity({{0, {f0, g0}}}).ok());
    CHECK(check_rigidity({{0, {rigid}}}).ok());
    CHECK(check_rigidity({{0, {Adaptation::main()}}}).ok());
    CHECK(check_rigidity({{0, {Adaptation::main(), f0}}}).ok());
    CHECK(check_rigidity({{4, {rigid, Adaptation::main()}}}).violating_occurrence == std::optional<std::size_t>(4));
    CHECK_FALSE(check_rigidity({{1, {rigid, f0}}}).ok());
    CHECK_FALSE(check_rigidity({{1, {rigid, Adaptation::coercion("c")}}}).ok());
    // Rigidity is per occurrence.
    CHECK(check_rigidity({{0, {rigid}}, {1, {f0, g0}}}).ok());
  }

  TEST_CASE("limit caps the number of analyses") {
    Lexicon flexible = with_rigidity(sentences(), "Liverpool", "townToClub", Rigidity::Flexible);
    CHECK(compose(tree(kBook), sentences(), 1).size() == 1);
    CHECK(compose(tree(kLiverpool), flexible, kUnlimited).size() == 1);
  }

  TEST_CASE("order-two fixture") {
    auto analyses = compose(tree("(NODE (LEAF has_some_property) (LEAF rex))"), sentences());
    REQUIRE(analyses.size() == 1);
    Reading r = read_analysis(analyses[0], sentences().signature);
    CHECK(hol::print_formula(r.formula) == "(exists (P (-> e:dog t)) (P rex))");
    CHECK(r.profile.order == 2);
  }
}
