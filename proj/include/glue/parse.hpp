#ifndef GLUE_PARSE_HPP
#define GLUE_PARSE_HPP

#include <string_view>

#include "glue/sexpr.hpp"
#include "glue/signature.hpp"
#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue {

struct TermParseOptions {
  /// Unknown free names become free variables instead of raising UnknownConstant.
  bool allow_free = false;
};

/// Parses a type without checking sorts against any signature.
Type parse_type(std::string_view text);
/// Parses a type, raising UnknownSort for entity sorts `sig` does not declare.
Type parse_type(std::string_view text, const Signature& sig);
Type parse_type(const SExpr& expr, const Signature* sig);

Term parse_term(std::string_view text, const Signature& sig, TermParseOptions options = {});
Term parse_term(const SExpr& expr, const Signature& sig, TermParseOptions options = {});

/// True for names usable as type variables: lowercase initial, not `t`, no `e:` prefix.
bool is_type_var_name(std::string_view name);

}  // namespace glue

#endif  // GLUE_PARSE_HPP
