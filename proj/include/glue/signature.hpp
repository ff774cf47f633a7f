#ifndef GLUE_SIGNATURE_HPP
#define GLUE_SIGNATURE_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue {

/// Subterms captured when an inductive rule fires on
/// `R [tys] args (C [ctor_tys] ctor_args)`.
struct RedexMatch {
  Term recursor;  // the recursor constant itself
  std::vector<Type> type_args;
  std::vector<Term> args;
  Term constructor;
  std::vector<Type> ctor_type_args;
  std::vector<Term> ctor_args;
};

/// A recursor reduction rule. The left-hand side is the spine
/// `recursor [type_args...] args... (constructor [ctor_type_args...] ctor_args...)`
/// with pattern variables everywhere except the two heads.
struct InductiveRule {
  std::string recursor;
  std::size_t type_args = 0;
  std::size_t term_args = 0;
  std::string constructor;
  std::size_t ctor_type_args = 0;
  std::size_t ctor_term_args = 0;
  std::function<Term(const RedexMatch&)> rewrite;
};

/// The active sorts, constants, definitions and inductive rules.
///
/// Constant types are closed and well formed over `sorts()`; add_constant
/// enforces it.
class Signature {
 public:
  bool has_sort(const std::string& name) const;
  const std::vector<std::string>& sorts() const { return sorts_; }
  /// Throws SortClash on redeclaration.
  void add_sort(const std::string& name);

  void add_constant(const std::string& name, Type type);
  std::optional<Type> lookup(const std::string& name) const;
  bool has_constant(const std::string& name) const { return constants_.contains(name); }
  const std::map<std::string, Type>& constants() const { return constants_; }

  /// Registers `name` as a constant whose meaning is `body`; body's type must be `type`.
  void add_definition(const std::string& name, Type type, Term body);
  const Term* definition(const std::string& name) const;

  void add_alias(const std::string& alias, const std::string& canonical);
  /// Canonical constant name for `name` (itself when not an alias).
  std::string resolve(const std::string& name) const;

  void add_rule(InductiveRule rule);
  const std::vector<InductiveRule>& rules() const { return rules_; }

  bool sets_enabled() const { return sets_enabled_; }
  void enable_sets() { sets_enabled_ = true; }

  /// Throws UnknownSort or Error when `type` mentions undeclared sorts, sets while
  /// disabled, or type variables outside `bound`.
  void check_well_formed(const Type& type, const std::vector<std::string>& bound = {}) const;

 private:
  std::vector<std::string> sorts_;
  std::map<std::string, Type> constants_;
  std::map<std::string, Term> definitions_;
  std::map<std::string, std::string> aliases_;
  std::vector<InductiveRule> rules_;
  bool sets_enabled_ = false;
};

/// Logical constants: ∧ ¬ ⊃ over t, the quantifiers ∀ ∃, Hilbert's ε τ, and the
/// polymorphic conjunction AND as a definable constant.
Signature builtin_signature();

/// The polymorphic conjunction
/// Λα Λβ λP^{α→t} λQ^{β→t} Λξ λx^ξ λf^{ξ→α} λg^{ξ→β}. ∧ (P (f x)) (Q (g x)).
Term polymorphic_and_term();

namespace names {
inline constexpr const char* kAnd = "∧";
inline constexpr const char* kNot = "¬";
inline constexpr const char* kImplies = "⊃";
inline constexpr const char* kForall = "∀";
inline constexpr const char* kExists = "∃";
inline constexpr const char* kEpsilon = "ε";
inline constexpr const char* kTau = "τ";
inline constexpr const char* kPolyAnd = "AND";
}  // namespace names

}  // namespace glue

#endif  // GLUE_SIGNATURE_HPP
