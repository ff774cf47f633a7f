#ifndef GLUE_TERM_HPP
#define GLUE_TERM_HPP

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "glue/type.hpp"

namespace glue {

struct TermNode;

/// Immutable Church-style System F term: every λ binder carries its type and
/// every constant carries its declared type.
class Term {
 public:
  struct Var;
  struct Const;
  struct Lam;
  struct App;
  struct TyLam;
  struct TyApp;

  static Term var(std::string name);
  static Term constant(std::string name, Type type);
  static Term lam(std::string binder, Type binder_type, Term body);
  static Term app(Term fn, Term arg);
  static Term ty_lam(std::string binder, Term body);
  static Term ty_app(Term fn, Type type_arg);

  template <class T>
  bool is() const;
  template <class T>
  const T& as() const;
  template <class T>
  const T* get() const;

  const TermNode& node() const { return *node_; }

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

struct Term::Var {
  std::string name;
};
struct Term::Const {
  std::string name;
  Type type;
};
struct Term::Lam {
  std::string binder;
  Type binder_type;
  Term body;
};
struct Term::App {
  Term fn;
  Term arg;
};
struct Term::TyLam {
  std::string binder;
  Term body;
};
struct Term::TyApp {
  Term fn;
  Type type_arg;
};

struct TermNode {
  std::variant<Term::Var, Term::Const, Term::Lam, Term::App, Term::TyLam, Term::TyApp> value;
};

template <class T>
bool Term::is() const {
  return std::holds_alternative<T>(node_->value);
}
template <class T>
const T& Term::as() const {
  return std::get<T>(node_->value);
}
template <class T>
const T* Term::get() const {
  return std::get_if<T>(&node_->value);
}

/// One argument of an application spine: a term argument or a type argument.
struct SpineArg {
  bool is_type = false;
  std::variant<Term, Type> value;

  const Term& term() const { return std::get<Term>(value); }
  const Type& type() const { return std::get<Type>(value); }
};

/// `h a1 ... an` decomposed into its head and arguments (left to right).
struct Spine {
  Term head;
  std::vector<SpineArg> args;
};

Spine decompose_spine(const Term& term);
Term rebuild_spine(const Term& head, const std::vector<SpineArg>& args);

/// Applies `fn` to each term argument in turn.
Term apply(Term fn, std::initializer_list<Term> args);

std::set<std::string> free_vars(const Term& term);
std::set<std::string> free_type_vars(const Term& term);
std::size_t term_size(const Term& term);

bool alpha_eq(const Term& a, const Term& b);

std::string print_term(const Term& term);

}  // namespace glue

#endif  // GLUE_TERM_HPP
