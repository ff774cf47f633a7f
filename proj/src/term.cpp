#include "glue/term.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "glue/overloaded.hpp"

namespace glue {

Term Term::var(std::string name) {
  return Term(std::make_shared<const TermNode>(TermNode{Var{std::move(name)}}));
}
Term Term::constant(std::string name, Type type) {
  return Term(std::make_shared<const TermNode>(TermNode{Const{std::move(name), std::move(type)}}));
}
Term Term::lam(std::string binder, Type binder_type, Term body) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Lam{std::move(binder), std::move(binder_type), std::move(body)}}));
}
Term Term::app(Term fn, Term arg) {
  return Term(std::make_shared<const TermNode>(TermNode{App{std::move(fn), std::move(arg)}}));
}
Term Term::ty_lam(std::string binder, Term body) {
  return Term(std::make_shared<const TermNode>(TermNode{TyLam{std::move(binder), std::move(body)}}));
}
Term Term::ty_app(Term fn, Type type_arg) {
  return Term(std::make_shared<const TermNode>(TermNode{TyApp{std::move(fn), std::move(type_arg)}}));
}

Spine decompose_spine(const Term& term) {
  std::vector<SpineArg> args;
  Term cur = term;
  while (true) {
    if (const auto* a = cur.get<Term::App>()) {
      args.push_back(SpineArg{false, a->arg});
      cur = a->fn;
    } else if (const auto* ta = cur.get<Term::TyApp>()) {
      args.push_back(SpineArg{true, ta->type_arg});
      cur = ta->fn;
    } else {
      break;
    }
  }
  std::reverse(args.begin(), args.end());
  return Spine{cur, std::move(args)};
}

Term rebuild_spine(const Term& head, const std::vector<SpineArg>& args) {
  Term out = head;
  for (const auto& a : args) out = a.is_type ? Term::ty_app(out, a.type()) : Term::app(out, a.term());
  return out;
}

Term apply(Term fn, std::initializer_list<Term> args) {
  for (const auto& a : args) fn = Term::app(fn, a);
  return fn;
}

namespace {

void collect_free_vars(const Term& term, std::vector<std::string>& bound, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Term::Var& v) {
                   if (std::find(bound.begin(), bound.end(), v.name) == bound.end()) out.insert(v.name);
                 },
                 [&](const Term::Const&) {},
                 [&](const Term::Lam& l) {
                   bound.push_back(l.binder);
                   collect_free_vars(l.body, bound, out);
                   bound.pop_back();
                 },
                 [&](const Term::App& a) {
                   collect_free_vars(a.fn, bound, out);
                   collect_free_vars(a.arg, bound, out);
                 },
                 [&](const Term::TyLam& l) { collect_free_vars(l.body, bound, out); },
                 [&](const Term::TyApp& a) { collect_free_vars(a.fn, bound, out); },
             },
             term.node().value);
}

void collect_free_type_vars(const Term& term, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto add = [&](const Type& type) {
    for (const auto& name : free_type_vars(type))
      if (std::find(bound.begin(), bound.end(), name) == bound.end()) out.insert(name);
  };
  std::visit(overloaded{
                 [&](const Term::Var&) {},
                 [&](const Term::Const& c) { add(c.type); },
                 [&](const Term::Lam& l) {
                   add(l.binder_type);
                   collect_free_type_vars(l.body, bound, out);
                 },
                 [&](const Term::App& a) {
                   collect_free_type_vars(a.fn, bound, out);
                   collect_free_type_vars(a.arg, bound, out);
                 },
                 [&](const Term::TyLam& l) {
                   bound.push_back(l.binder);
                   collect_free_type_vars(l.body, bound, out);
                   bound.pop_back();
                 },
                 [&](const Term::TyApp& a) {
                   collect_free_type_vars(a.fn, bound, out);
                   add(a.type_arg);
                 },
             },
             term.node().value);
}

using BinderStack = std::vector<std::pair<std::string, std::string>>;

// Resolves a pair of variable occurrences against the binder stack: both bound at
// the same depth, or both free with equal names.
bool same_variable(const BinderStack& stack, const std::string& x, const std::string& y) {
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    bool left = it->first == x;
    bool right = it->second == y;
    if (left || right) return left && right;
  }
  return x == y;
}

bool type_eq_under(const Type& a, const Type& b, const BinderStack& tyvars) {
  if (tyvars.empty()) return alpha_eq(a, b);
  // Close over the bound type variables by wrapping both sides in matching binders.
  Type wa = a;
  Type wb = b;
  for (auto it = tyvars.rbegin(); it != tyvars.rend(); ++it) {
    wa = Type::forall(it->first, wa);
    wb = Type::forall(it->second, wb);
  }
  return alpha_eq(wa, wb);
}

bool alpha_eq_impl(const Term& a, const Term& b, BinderStack& vars, BinderStack& tyvars) {
  if (a.node().value.index() != b.node().value.index()) return false;
  return std::visit(
      overloaded{
          [&](const Term::Var& x) { return same_variable(vars, x.name, b.as<Term::Var>().name); },
          [&](const Term::Const& x) {
            const auto& y = b.as<Term::Const>();
            return x.name == y.name && type_eq_under(x.type, y.type, tyvars);
          },
          [&](const Term::Lam& x) {
            const auto& y = b.as<Term::Lam>();
            if (!type_eq_under(x.binder_type, y.binder_type, tyvars)) return false;
            vars.emplace_back(x.binder, y.binder);
            bool eq = alpha_eq_impl(x.body, y.body, vars, tyvars);
            vars.pop_back();
            return eq;
          },
          [&](const Term::App& x) {
            const auto& y = b.as<Term::App>();
            return alpha_eq_impl(x.fn, y.fn, vars, tyvars) && alpha_eq_impl(x.arg, y.arg, vars, tyvars);
          },
          [&](const Term::TyLam& x) {
            const auto& y = b.as<Term::TyLam>();
            tyvars.emplace_back(x.binder, y.binder);
            bool eq = alpha_eq_impl(x.body, y.body, vars, tyvars);
            tyvars.pop_back();
            return eq;
          },
          [&](const Term::TyApp& x) {
            const auto& y = b.as<Term::TyApp>();
            return type_eq_under(x.type_arg, y.type_arg, tyvars) && alpha_eq_impl(x.fn, y.fn, vars, tyvars);
          },
      },
      a.node().value);
}

void print_impl(const Term& term, std::ostream& os) {
  std::visit(overloaded{
                 [&](const Term::Var& v) { os << v.name; },
                 [&](const Term::Const& c) { os << c.name; },
                 [&](const Term::Lam& l) {
                   os << "(lam (" << l.binder << ' ' << print_type(l.binder_type) << ") ";
                   print_impl(l.body, os);
                   os << ')';
                 },
                 [&](const Term::App& a) {
                   os << "(app ";
                   print_impl(a.fn, os);
                   os << ' ';
                   print_impl(a.arg, os);
                   os << ')';
                 },
                 [&](const Term::TyLam& l) {
                   os << "(tlam " << l.binder << ' ';
                   print_impl(l.body, os);
                   os << ')';
                 },
                 [&](const Term::TyApp& a) {
                   os << "(tapp ";
                   print_impl(a.fn, os);
                   os << ' ' << print_type(a.type_arg) << ')';
                 },
             },
             term.node().value);
}

}  // namespace

std::set<std::string> free_vars(const Term& term) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free_vars(term, bound, out);
  return out;
}

std::set<std::string> free_type_vars(const Term& term) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free_type_vars(term, bound, out);
  return out;
}

std::size_t term_size(const Term& term) {
  return std::visit(overloaded{
                        [](const Term::Var&) -> std::size_t { return 1; },
                        [](const Term::Const&) -> std::size_t { return 1; },
                        [](const Term::Lam& l) { return 1 + term_size(l.body); },
                        [](const Term::App& a) { return 1 + term_size(a.fn) + term_size(a.arg); },
                        [](const Term::TyLam& l) { return 1 + term_size(l.body); },
                        [](const Term::TyApp& a) { return 1 + term_size(a.fn); },
                    },
                    term.node().value);
}

bool alpha_eq(const Term& a, const Term& b) {
  BinderStack vars;
  BinderStack tyvars;
  return alpha_eq_impl(a, b, vars, tyvars);
}

std::string print_term(const Term& term) {
  std::ostringstream os;
  print_impl(term, os);
  return os.str();
}

}  // namespace glue
