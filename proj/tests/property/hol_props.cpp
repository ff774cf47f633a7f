#include <doctest.h>

#include "generators.hpp"
#include "glue/hol.hpp"
#include "glue/kernel.hpp"

using namespace glue;
using namespace glue::testing;

TEST_SUITE("hol-properties") {
  TEST_CASE("extraction and read-back are inverse on normal terms") {
    Rng rng(61);
    Signature sig = logic_signature();
    NormalTermGenerator gen(sig, rng);
    std::size_t higher_order = 0;
    for (int i = 0; i < 500; ++i) {
      Term m = gen.formula(4);
      REQUIRE(typecheck(m, sig).is_prop());
      REQUIRE(is_beta_normal(m, sig));
      REQUIRE_MESSAGE(is_eta_long(m, sig), print_term(m));

      hol::Formula f = hol::extract_formula(m, sig);
      Term back = hol::read_back(f, sig);
      REQUIRE_MESSAGE(alpha_eq(back, m), print_term(m) << "\n" << print_term(back));

      std::string text = hol::print_formula(f);
      hol::Formula reparsed = hol::parse_formula(text, sig);
      REQUIRE(hol::print_formula(reparsed) == text);
      REQUIRE(alpha_eq(hol::read_back(reparsed, sig), m));
      CHECK_FALSE(hol::print_formula(f, hol::Style::Unicode).empty());

      hol::LogicProfile profile = hol::classify(f);
      Term renamed = rename_binders(m, rng);
      REQUIRE(hol::classify(hol::extract_formula(renamed, sig)) == profile);
      if (profile.order > 1) ++higher_order;
    }
    CHECK(higher_order > 50);
  }

  TEST_CASE("non-normal terms are rejected") {
    Rng rng(62);
    Signature sig = kernel_signature();
    TermGenerator gen(sig, rng);
    std::size_t rejected = 0;
    for (int i = 0; i < 300; ++i) {
      Term m = gen.term(TypingContext{}, Type::prop(), 3);
      if (is_beta_normal(m, sig) && is_eta_long(m, sig)) continue;
      CHECK_THROWS_AS((void)hol::extract_formula(m, sig), hol::ExtractionError);
      ++rejected;
    }
    CHECK(rejected > 100);
  }
}
