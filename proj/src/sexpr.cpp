#include "glue/sexpr.hpp"

#include <cctype>

#include "glue/error.hpp"

namespace glue {

namespace {

class Reader {
 public:
  Reader(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line + 1), column_(column + 1) {}

  bool at_end() {
    skip_blank();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip_blank();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", line_, column_);
    SExpr out;
    out.line = line_;
    out.column = column_;
    char c = text_[pos_];
    if (c == ')') throw SyntaxError("unexpected ')'", line_, column_);
    if (c == '(') {
      advance();
      out.is_list = true;
      while (true) {
        skip_blank();
        if (pos_ >= text_.size()) throw SyntaxError("unclosed '('", out.line, out.column);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        out.items.push_back(read());
      }
      return out;
    }
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
      out.atom += text_[pos_];
      advance();
    }
    return out;
  }

 private:
  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == '#' || std::isspace(static_cast<unsigned char>(c));
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

void print(const SExpr& e, std::string& out) {
  if (e.is_atom()) {
    out += e.atom;
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    print(e.items[i], out);
  }
  out += ')';
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text, std::size_t line_offset, std::size_t column_offset) {
  Reader reader(text, line_offset, column_offset);
  std::vector<SExpr> out;
  while (!reader.at_end()) out.push_back(reader.read());
  return out;
}

SExpr read_sexpr(std::string_view text, std::size_t line_offset, std::size_t column_offset) {
  Reader reader(text, line_offset, column_offset);
  if (reader.at_end()) throw SyntaxError("expected an expression", line_offset + 1, column_offset + 1);
  SExpr e = reader.read();
  if (!reader.at_end()) throw SyntaxError("trailing input after expression", e.line, e.column);
  return e;
}

std::string to_string(const SExpr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

void syntax_error(const SExpr& at, const std::string& message) {
  throw SyntaxError(message, at.line, at.column);
}

}  // namespace glue
