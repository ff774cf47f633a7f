#include "glue/pipeline.hpp"

namespace glue {

Reading read_term(const Term& term, const Signature& sig, std::size_t fuel) {
  Term unfolded = unfold_definitions(term, sig);
  NormalForm normal = normalize(unfolded, sig, fuel);
  NormalForm eta = eta_expand(normal.term, sig);
  hol::Formula formula = hol::extract_formula(eta, sig);
  hol::LogicProfile profile = hol::classify(formula);
  return Reading{std::move(unfolded), std::move(normal), std::move(eta), std::move(formula), profile};
}

}  // namespace glue
