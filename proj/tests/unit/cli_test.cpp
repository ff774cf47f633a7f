#include <doctest.h>

#include "commands.hpp"
#include "fixtures.hpp"

using glue::cli::Outcome;
using glue::cli::run;
using glue::testing::fixture_path;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("lexicon check") {
    Outcome ok = run({"lexicon", "check", fixture_path("sentences.lex")});
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, ": ok ("));

    Outcome diamond = run({"lexicon", "check", fixture_path("diamond.lex")});
    CHECK(diamond.exit_code == 1);
    CHECK(contains(diamond.out, "[bookPhys physObj] [bookInfo infoObj]"));

    Outcome missing = run({"lexicon", "check", fixture_path("missing.lex")});
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.err, "cannot read"));
  }

  TEST_CASE("compose reports analyses and diagnoses") {
    Outcome out = run({"compose", fixture_path("sentences.lex"), fixture_path("sentences.trees"), "--profile", "--show-formula"});
    CHECK(out.exit_code == 1);  // two trees are meant to fail
    CHECK(contains(out.out, "formula: (and (heavy (g0 b)) (interesting (f0 b)))"));
    CHECK(contains(out.out, "diagnosis: RigidityViolation(Liverpool) at root"));
    CHECK(contains(out.out, "diagnosis: NoPath(chair, dog) at root"));
    CHECK(contains(out.out, "profile: order 2, sorts 1"));
  }

  TEST_CASE("compose json is stable") {
    std::vector<std::string> args{"compose", fixture_path("sentences.lex"), fixture_path("sentences.trees"), "--json"};
    Outcome a = run(args);
    Outcome b = run(args);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"formula\": \"(and (heavy (g0 b)) (interesting (f0 b)))\""));
  }

  TEST_CASE("typecheck and normalize") {
    Outcome t = run({"typecheck", fixture_path("sentences.lex"), "AND"});
    CHECK(t.exit_code == 0);
    CHECK(contains(t.out, "(all a (all b"));

    Outcome bad = run({"typecheck", fixture_path("sentences.lex"), "(app barks chairObj)"});
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.err, "TypeMismatch at root.arg"));

    Outcome syntax = run({"typecheck", fixture_path("sentences.lex"), "(app barks"});
    CHECK(syntax.exit_code == 2);

    Outcome id = run({"normalize", fixture_path("sentences.lex"), "(app (lam (x e:dog) x) rex)"});
    CHECK(id.exit_code == 0);
    CHECK(contains(id.out, "normal: rex"));

    Outcome book = run({"normalize", fixture_path("sentences.lex"),
                        "(app (app (app (tapp (app (app (tapp (tapp AND e:phys) e:I) heavy) interesting) e:book) b) "
                        "g0) f0)"});
    CHECK(contains(book.out, "normal: (app (app ∧ (app heavy (app g0 b))) (app interesting (app f0 b)))"));

    Outcome eta = run({"normalize", fixture_path("sentences.lex"), "barks", "--eta-long"});
    CHECK(contains(eta.out, "eta-long: (lam (x e:dog) (app barks x))"));
  }

  TEST_CASE("search-false") {
    Outcome none = run({"search-false", "--max-size", "9", "(all a a)"});
    CHECK(none.exit_code == 0);
    CHECK(contains(none.out, "inhabitants: 0"));
    Outcome id = run({"search-false", "--max-size", "5", "(all a (-> a a))"});
    CHECK(id.exit_code == 1);
    CHECK(contains(id.out, "(tlam a (lam (x a) x))"));
    CHECK(run({"search-false", "--max-size", "40", "(all a a)"}).exit_code == 2);
    CHECK(run({"search-false", "(-> a a)"}).exit_code == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    Outcome help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(contains(help.out, "compose"));
  }
}
