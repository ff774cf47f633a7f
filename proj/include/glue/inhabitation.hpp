#ifndef GLUE_INHABITATION_HPP
#define GLUE_INHABITATION_HPP

#include <cstddef>
#include <vector>

#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue {

/// Closed, constant-free, β-normal, η-long terms of `target` in pure System F
/// with at most `max_size` nodes, ordered by size then by search order.
///
/// Type applications are instantiated from a finite pool: the type variables in
/// scope plus every well-scoped subterm of the target and of the context types.
/// Throws Error when `target` has free type variables.
std::vector<Term> inhabitants(const Type& target, std::size_t max_size);

/// Consistency probe: the inhabitants of `target` up to `max_size`. An empty
/// result at a false type such as ∀a.a is the expected outcome.
inline std::vector<Term> search_false(std::size_t max_size, const Type& target) {
  return inhabitants(target, max_size);
}

}  // namespace glue

#endif  // GLUE_INHABITATION_HPP
