#include <doctest.h>

#include "fixtures.hpp"
#include "glue/kernel.hpp"
#include "glue/lexicon.hpp"
#include "glue/parse.hpp"

using namespace glue;
using glue::testing::read_fixture;

namespace {

const LexiconDiagnostic& only(const LexiconCheck& check) {
  REQUIRE(check.diagnostics.size() == 1);
  return check.diagnostics.front();
}

}  // namespace

TEST_SUITE("lexicon") {
  TEST_CASE("fixture lexicon loads") {
    Lexicon lex = load_lexicon(read_fixture("sentences.lex"));
    const auto& book = transfers_for(lex, "book");
    REQUIRE(book.size() == 2);
    CHECK(book[0].label == "f0");
    CHECK(book[0].rigidity == Rigidity::Flexible);
    CHECK(book[1].label == "g0");
    CHECK(alpha_eq(book[1].type, parse_type("(-> e:book e:phys)")));
    CHECK(transfers_for(lex, "sleeps").empty());
    const auto& liv = transfers_for(lex, "Liverpool");
    REQUIRE(liv.size() == 1);
    CHECK(liv[0].label == "townToClub");
    CHECK(liv[0].rigidity == Rigidity::Rigid);
    CHECK(alpha_eq(lex.entry("Liverpool").main_type, Type::entity("town")));
    CHECK_THROWS_AS(transfers_for(lex, "unicorn"), UnknownWord);
  }

  TEST_CASE("entry that fails typechecking") {
    LexiconCheck check = check_lexicon(
        "sort e:dog\n"
        "const barks : (-> e:dog t)\n"
        "word bad main (app barks barks)\n");
    const auto& d = only(check);
    CHECK(d.kind == LexiconDiagnostic::Kind::TypeErrorInEntry);
    CHECK(d.word == "bad");
    CHECK(d.line == 3);
    CHECK_FALSE(check.lexicon.has_value());
    CHECK_THROWS_AS(load_lexicon("sort e:dog\nword bad main (app barks barks)\n"), LexiconError);
  }

  TEST_CASE("every problem is reported") {
    LexiconCheck check = check_lexicon(
        "sort e:dog\n"
        "sort e:dog\n"
        "const c : e:cat\n"
        "word rex main c\n"
        "word rex main c\n"
        "frobnicate\n"
        "word-transfer ghost x flexible c\n");
    std::vector<LexiconDiagnostic::Kind> kinds;
    for (const auto& d : check.diagnostics) kinds.push_back(d.kind);
    using K = LexiconDiagnostic::Kind;
    CHECK(kinds == std::vector<K>{K::DuplicateDeclaration, K::UnknownSort, K::TypeErrorInEntry, K::DuplicateWord,
                                  K::SyntaxError, K::UnknownWord});
  }

  TEST_CASE("incoherent coercions are rejected") {
    LexiconCheck check = check_lexicon(read_fixture("diamond.lex"));
    const auto& d = only(check);
    CHECK(d.kind == LexiconDiagnostic::Kind::IncoherentCoercions);
    CHECK(d.message == "MultiplePaths(book, obj) [bookPhys physObj] [bookInfo infoObj]");
  }

  TEST_CASE("duplicate transfer labels") {
    LexiconCheck check = check_lexicon(
        "sort e:a\nsort e:b\nconst x : e:a\nconst f : (-> e:a e:b)\n"
        "word w main x\nword-transfer w f flexible f\nword-transfer w f rigid f\n");
    CHECK(only(check).kind == LexiconDiagnostic::Kind::DuplicateLabel);
  }

  TEST_CASE("syntax errors point at the line") {
    LexiconCheck check = check_lexicon("sort e:a\nconst x : (-> e:a\n");
    const auto& d = only(check);
    CHECK(d.kind == LexiconDiagnostic::Kind::SyntaxError);
    CHECK(d.line == 2);
  }

  TEST_CASE("save then load preserves entries") {
    Lexicon lex = load_lexicon(read_fixture("sentences.lex"));
    Lexicon again = load_lexicon(save_lexicon(lex));
    REQUIRE(again.entries.size() == lex.entries.size());
    for (const auto& [word, entry] : lex.entries) {
      const LexEntry& other = again.entry(word);
      CHECK(alpha_eq(entry.main, other.main));
      REQUIRE(entry.transfers.size() == other.transfers.size());
      for (std::size_t i = 0; i < entry.transfers.size(); ++i) {
        CHECK(entry.transfers[i].label == other.transfers[i].label);
        CHECK(entry.transfers[i].rigidity == other.transfers[i].rigidity);
        CHECK(alpha_eq(entry.transfers[i].term, other.transfers[i].term));
      }
    }
    CHECK(save_lexicon(again) == save_lexicon(lex));
  }

  TEST_CASE("inductive pragmas") {
    Lexicon lex = load_lexicon(read_fixture("arith.lex"));
    CHECK(lex.uses_nat);
    CHECK(lex.uses_finset);
    CHECK(lex.signature.lookup("RecN").has_value());
    CHECK(alpha_eq(lex.entry("two").main_type, Type::entity("nat")));
  }

  TEST_CASE("with_rigidity flips one flag") {
    Lexicon lex = load_lexicon(read_fixture("sentences.lex"));
    Lexicon flexible = with_rigidity(lex, "Liverpool", "townToClub", Rigidity::Flexible);
    CHECK(transfers_for(flexible, "Liverpool")[0].rigidity == Rigidity::Flexible);
    CHECK(transfers_for(lex, "Liverpool")[0].rigidity == Rigidity::Rigid);
    CHECK_THROWS_AS(with_rigidity(lex, "Liverpool", "nope", Rigidity::Flexible), Error);
  }
}
