#ifndef GLUE_KERNEL_HPP
#define GLUE_KERNEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glue/error.hpp"
#include "glue/signature.hpp"
#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue {

/// Term variables (innermost binding last) and type variables in scope.
class TypingContext {
 public:
  TypingContext() = default;

  TypingContext with_var(std::string name, Type type) const;
  TypingContext with_type_var(std::string name) const;

  std::optional<Type> lookup(const std::string& name) const;
  bool has_type_var(const std::string& name) const;
  bool binds(const std::string& name) const { return lookup(name).has_value(); }

  const std::vector<std::pair<std::string, Type>>& vars() const { return vars_; }
  const std::vector<std::string>& type_vars() const { return type_vars_; }

 private:
  std::vector<std::pair<std::string, Type>> vars_;
  std::vector<std::string> type_vars_;
};

/// Typing failure. `path` locates the offending subterm from the root
/// (steps such as "fn", "arg", "body").
class TypeError : public Error {
 public:
  enum class Kind { TypeMismatch, UnboundVariable, IllFormedType, UnknownConstant };

  TypeError(Kind kind, std::string expected, std::string found, std::vector<std::string> path);

  Kind kind() const { return kind_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& path() const { return path_; }
  std::string path_string() const;

 private:
  Kind kind_;
  std::string expected_;
  std::string found_;
  std::vector<std::string> path_;
};

const char* to_string(TypeError::Kind kind);

Type typecheck(const TypingContext& ctx, const Term& term, const Signature& sig);
inline Type typecheck(const Term& term, const Signature& sig) { return typecheck(TypingContext{}, term, sig); }

/// Capture-avoiding `term[name := replacement]`.
Term substitute(const Term& term, const std::string& name, const Term& replacement);
/// Capture-avoiding `term[type_var := replacement]`, through binder types too.
Term substitute_ty(const Term& term, const std::string& type_var, const Type& replacement);

/// Replaces every definable constant (such as AND) by its definition.
Term unfold_definitions(const Term& term, const Signature& sig);

/// Contractum of a recursor redex rooted at `term`, if the signature has a matching rule.
std::optional<Term> contract_recursor(const Term& term, const Signature& sig);

enum class Strategy { LeftmostOutermost, RightmostInnermost };

/// Contracts exactly one redex (β, type-β or recursor) chosen by `strategy`;
/// nullopt when the term is normal.
std::optional<Term> reduce_once(const Term& term, const Signature& sig, Strategy strategy);

struct NormalForm {
  Term term;
  bool eta_long = false;
  bool beta_normal = false;
  std::size_t steps = 0;
};

inline constexpr std::size_t kDefaultFuel = 100000;

/// Full normalization. Throws FuelExhausted after `fuel` contractions.
NormalForm normalize(const Term& term, const Signature& sig, std::size_t fuel = kDefaultFuel);

/// η-long form of a β-normal, well-typed term.
NormalForm eta_expand(const TypingContext& ctx, const Term& term, const Signature& sig);
inline NormalForm eta_expand(const Term& term, const Signature& sig) {
  return eta_expand(TypingContext{}, term, sig);
}

bool is_beta_normal(const Term& term, const Signature& sig);
bool is_eta_long(const TypingContext& ctx, const Term& term, const Signature& sig);
inline bool is_eta_long(const Term& term, const Signature& sig) { return is_eta_long(TypingContext{}, term, sig); }

}  // namespace glue

#endif  // GLUE_KERNEL_HPP
