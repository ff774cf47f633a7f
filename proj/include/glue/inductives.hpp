#ifndef GLUE_INDUCTIVES_HPP
#define GLUE_INDUCTIVES_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "glue/signature.hpp"
#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue {

namespace names {
inline constexpr const char* kNatSort = "nat";
inline constexpr const char* kZero = "Zero";
inline constexpr const char* kSucc = "Succ";
inline constexpr const char* kRecN = "RecN";
inline constexpr const char* kEmptyS = "EmptyS";
inline constexpr const char* kInsertS = "InsertS";
inline constexpr const char* kFoldS = "FoldS";
}  // namespace names

/// Gödel-T naturals: sort `nat`, Zero, Succ and the recursor
/// RecN : ∀a. a → (nat → a → a) → nat → a with
///   RecN a b s Zero     ~> b
///   RecN a b s (Succ n) ~> s n (RecN a b s n)
/// Throws SortClash when `nat` is already declared.
Signature register_nat(Signature sig);

/// Finite sets as free insert-lists: `(set a)`, EmptyS, InsertS and
/// FoldS : ∀a.∀b. b → (a → b → b) → set a → b with
///   FoldS a b z s EmptyS           ~> z
///   FoldS a b z s (InsertS x xs)   ~> s x (FoldS a b z s xs)
/// Throws SortClash when sets are already enabled.
Signature register_finset(Signature sig);

Type nat_type();
Term zero();
Term succ(Term n);
Term numeral(std::size_t n);
/// n for a closed `Succ^n Zero`, nullopt otherwise.
std::optional<std::size_t> numeral_value(const Term& term);

Term rec_nat(const Type& result, Term base, Term step, Term scrutinee);
Term empty_set(const Type& element);
Term insert_set(const Type& element, Term x, Term xs);
Term fold_set(const Type& element, const Type& result, Term base, Term step, Term scrutinee);

/// λm.λn. RecN nat n (λk.λa. Succ a) m
Term nat_addition();

struct OrthogonalityReport {
  /// Indices of the first overlapping pair, when any.
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  bool ok() const { return !overlap.has_value(); }
};

/// Left-hand sides are linear spines with exactly two rigid symbols (the
/// recursor and the constructor). Two rules overlap when they share both, or
/// when one rule's constructor is another rule's recursor (a nested overlap).
OrthogonalityReport check_orthogonality(const std::vector<InductiveRule>& rules);

}  // namespace glue

#endif  // GLUE_INDUCTIVES_HPP
