#ifndef GLUE_PIPELINE_HPP
#define GLUE_PIPELINE_HPP

#include "glue/composer.hpp"
#include "glue/hol.hpp"
#include "glue/kernel.hpp"
#include "glue/signature.hpp"

namespace glue {

/// What a composed term means: its normal forms and the formula read off them.
struct Reading {
  Term unfolded;       // definitions such as AND replaced by their bodies
  NormalForm normal;   // β-normal
  NormalForm eta_long;
  hol::Formula formula;
  hol::LogicProfile profile;
};

/// unfold_definitions, normalize, eta_expand, extract_formula, classify.
/// Throws ExtractionError when the result type is not t.
Reading read_term(const Term& term, const Signature& sig, std::size_t fuel = kDefaultFuel);
inline Reading read_analysis(const Analysis& analysis, const Signature& sig) { return read_term(analysis.term, sig); }

}  // namespace glue

#endif  // GLUE_PIPELINE_HPP
