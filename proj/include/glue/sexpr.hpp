#ifndef GLUE_SEXPR_HPP
#define GLUE_SEXPR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace glue {

/// A parenthesized expression with source positions, shared by every textual
/// format (types, terms, parse trees, formulas).
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_atom() const { return !is_list; }
  bool is_atom(std::string_view text) const { return !is_list && atom == text; }
  /// True for a list whose first item is the atom `keyword`.
  bool is_form(std::string_view keyword) const {
    return is_list && !items.empty() && items.front().is_atom(keyword);
  }
};

/// Reads every top-level expression in `text`. `#` starts a comment to end of line.
/// `line_offset` and `column_offset` shift reported positions (for text embedded
/// in a larger document).
std::vector<SExpr> read_sexprs(std::string_view text, std::size_t line_offset = 0, std::size_t column_offset = 0);

/// Reads exactly one expression; throws SyntaxError otherwise.
SExpr read_sexpr(std::string_view text, std::size_t line_offset = 0, std::size_t column_offset = 0);

std::string to_string(const SExpr& expr);

[[noreturn]] void syntax_error(const SExpr& at, const std::string& message);

}  // namespace glue

#endif  // GLUE_SEXPR_HPP
