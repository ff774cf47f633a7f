#include <doctest.h>

#include "generators.hpp"
#include "glue/inductives.hpp"
#include "glue/kernel.hpp"

using namespace glue;
using namespace glue::testing;

namespace {

constexpr std::size_t kStepCap = 20000;

struct Run {
  Term normal;
  std::size_t steps = 0;
};

// Reduces to normal form one step at a time, checking the type after each step.
Run reduce_checked(const Term& m, const Type& ty, const Signature& sig, Strategy strategy) {
  Run run{m, 0};
  while (auto next = reduce_once(run.normal, sig, strategy)) {
    Type after = typecheck(*next, sig);
    REQUIRE_MESSAGE(alpha_eq(after, ty), "subject reduction failed on " << print_term(run.normal));
    run.normal = *next;
    REQUIRE(++run.steps < kStepCap);
  }
  return run;
}

bool mentions(const Term& m, const std::string& name) {
  return print_term(m).find(name) != std::string::npos;
}

}  // namespace

TEST_SUITE("kernel-properties") {
  TEST_CASE("subject reduction, confluence, idempotence and eta stability") {
    Rng rng(21);
    Signature sig = kernel_signature();
    TermGenerator gen(sig, rng);
    std::size_t with_recursors = 0;
    std::size_t reducible = 0;
    for (int i = 0; i < 1000; ++i) {
      auto [m, ty] = gen.closed(4);
      REQUIRE_MESSAGE(alpha_eq(typecheck(m, sig), ty), print_term(m));
      // Uniqueness of types: renaming binders cannot change the type.
      REQUIRE(alpha_eq(typecheck(rename_binders(m, rng), sig), ty));

      Run lo = reduce_checked(m, ty, sig, Strategy::LeftmostOutermost);
      Run ri = reduce_checked(m, ty, sig, Strategy::RightmostInnermost);
      REQUIRE_MESSAGE(alpha_eq(lo.normal, ri.normal), print_term(m));

      NormalForm nf = normalize(m, sig);
      REQUIRE(alpha_eq(nf.term, lo.normal));
      REQUIRE(alpha_eq(normalize(nf.term, sig).term, nf.term));
      REQUIRE(is_beta_normal(nf.term, sig));

      NormalForm eta = eta_expand(nf.term, sig);
      REQUIRE(is_eta_long(eta.term, sig));
      REQUIRE(alpha_eq(typecheck(eta.term, sig), ty));
      REQUIRE(alpha_eq(eta_expand(eta.term, sig).term, eta.term));
      REQUIRE(alpha_eq(normalize(eta.term, sig).term, eta.term));

      if (lo.steps > 0) ++reducible;
      if (mentions(m, "RecN") || mentions(m, "FoldS")) ++with_recursors;
    }
    // The corpus must actually exercise reduction and the recursors.
    CHECK(reducible > 500);
    CHECK(with_recursors > 100);
  }
}
