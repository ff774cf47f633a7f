#include "glue/parse.hpp"

#include <algorithm>
#include <vector>

#include "glue/error.hpp"

namespace glue {

bool is_type_var_name(std::string_view name) {
  if (name.empty() || name == "t" || name.starts_with("e:")) return false;
  return name.front() >= 'a' && name.front() <= 'z';
}

namespace {

const SExpr& atom_at(const SExpr& form, std::size_t i, const char* what) {
  if (form.items.size() <= i) syntax_error(form, std::string("missing ") + what);
  const SExpr& e = form.items[i];
  if (!e.is_atom()) syntax_error(e, std::string("expected ") + what);
  return e;
}

void expect_arity(const SExpr& form, std::size_t n) {
  if (form.items.size() != n)
    syntax_error(form, "'" + form.items.front().atom + "' expects " + std::to_string(n - 1) + " operands");
}

}  // namespace

Type parse_type(const SExpr& e, const Signature* sig) {
  if (e.is_atom()) {
    const std::string& a = e.atom;
    if (a == "t") return Type::prop();
    if (a.starts_with("e:")) {
      std::string name = a.substr(2);
      if (name.empty()) syntax_error(e, "empty entity sort name");
      if (sig != nullptr && !sig->has_sort(name)) throw UnknownSort(name);
      return Type::entity(std::move(name));
    }
    if (is_type_var_name(a)) return Type::var(a);
    syntax_error(e, "not a type: '" + a + "'");
  }
  if (e.items.empty()) syntax_error(e, "empty type form");
  if (e.is_form("->")) {
    expect_arity(e, 3);
    return Type::arrow(parse_type(e.items[1], sig), parse_type(e.items[2], sig));
  }
  if (e.is_form("all")) {
    expect_arity(e, 3);
    const SExpr& binder = atom_at(e, 1, "type variable");
    if (!is_type_var_name(binder.atom)) syntax_error(binder, "invalid type variable '" + binder.atom + "'");
    return Type::forall(binder.atom, parse_type(e.items[2], sig));
  }
  if (e.is_form("set")) {
    expect_arity(e, 2);
    if (sig != nullptr && !sig->sets_enabled()) syntax_error(e, "finite sets are not enabled (use finset)");
    return Type::set_of(parse_type(e.items[1], sig));
  }
  syntax_error(e, "unknown type form '" + to_string(e.items.front()) + "'");
}

Type parse_type(std::string_view text) { return parse_type(read_sexpr(text), nullptr); }

Type parse_type(std::string_view text, const Signature& sig) { return parse_type(read_sexpr(text), &sig); }

namespace {

struct TermParser {
  const Signature& sig;
  TermParseOptions options;
  std::vector<std::string> scope;

  Term parse(const SExpr& e) {
    if (e.is_atom()) return identifier(e);
    if (e.items.empty()) syntax_error(e, "empty term form");
    if (e.is_form("lam")) {
      expect_arity(e, 3);
      const SExpr& binding = e.items[1];
      if (!binding.is_list || binding.items.size() != 2 || !binding.items[0].is_atom())
        syntax_error(binding, "expected (variable TYPE)");
      const std::string& name = binding.items[0].atom;
      Type type = parse_type(binding.items[1], &sig);
      scope.push_back(name);
      Term body = parse(e.items[2]);
      scope.pop_back();
      return Term::lam(name, std::move(type), std::move(body));
    }
    if (e.is_form("app")) {
      expect_arity(e, 3);
      return Term::app(parse(e.items[1]), parse(e.items[2]));
    }
    if (e.is_form("tlam")) {
      expect_arity(e, 3);
      const SExpr& binder = atom_at(e, 1, "type variable");
      if (!is_type_var_name(binder.atom)) syntax_error(binder, "invalid type variable '" + binder.atom + "'");
      return Term::ty_lam(binder.atom, parse(e.items[2]));
    }
    if (e.is_form("tapp")) {
      expect_arity(e, 3);
      return Term::ty_app(parse(e.items[1]), parse_type(e.items[2], &sig));
    }
    syntax_error(e, "unknown term form '" + to_string(e.items.front()) + "'");
  }

  Term identifier(const SExpr& e) {
    const std::string& name = e.atom;
    if (std::find(scope.rbegin(), scope.rend(), name) != scope.rend()) return Term::var(name);
    std::string canonical = sig.resolve(name);
    if (auto type = sig.lookup(canonical)) return Term::constant(canonical, *type);
    if (options.allow_free) return Term::var(name);
    throw UnknownConstant(name);
  }
};

}  // namespace

Term parse_term(const SExpr& expr, const Signature& sig, TermParseOptions options) {
  TermParser parser{sig, options, {}};
  return parser.parse(expr);
}

Term parse_term(std::string_view text, const Signature& sig, TermParseOptions options) {
  return parse_term(read_sexpr(text), sig, options);
}

}  // namespace glue
