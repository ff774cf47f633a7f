#include "glue/signature.hpp"

#include <algorithm>

#include "glue/error.hpp"
#include "glue/overloaded.hpp"

namespace glue {

bool Signature::has_sort(const std::string& name) const {
  return std::find(sorts_.begin(), sorts_.end(), name) != sorts_.end();
}

void Signature::add_sort(const std::string& name) {
  if (name.empty()) throw Error("entity sort names must be nonempty");
  if (has_sort(name)) throw SortClash(name);
  sorts_.push_back(name);
}

void Signature::add_constant(const std::string& name, Type type) {
  if (constants_.contains(name)) throw Error("constant already declared: " + name);
  check_well_formed(type);
  constants_.emplace(name, std::move(type));
}

std::optional<Type> Signature::lookup(const std::string& name) const {
  auto it = constants_.find(resolve(name));
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

void Signature::add_definition(const std::string& name, Type type, Term body) {
  add_constant(name, std::move(type));
  definitions_.emplace(name, std::move(body));
}

const Term* Signature::definition(const std::string& name) const {
  auto it = definitions_.find(name);
  return it == definitions_.end() ? nullptr : &it->second;
}

void Signature::add_alias(const std::string& alias, const std::string& canonical) {
  aliases_[alias] = canonical;
}

std::string Signature::resolve(const std::string& name) const {
  auto it = aliases_.find(name);
  return it == aliases_.end() ? name : it->second;
}

void Signature::add_rule(InductiveRule rule) { rules_.push_back(std::move(rule)); }

void Signature::check_well_formed(const Type& type, const std::vector<std::string>& bound) const {
  std::visit(overloaded{
                 [&](const Type::Base& b) {
                   if (!b.sort.is_prop() && !has_sort(b.sort.name)) throw UnknownSort(b.sort.name);
                 },
                 [&](const Type::Var& v) {
                   if (std::find(bound.begin(), bound.end(), v.name) == bound.end())
                     throw Error("ill-formed type: unbound type variable " + v.name);
                 },
                 [&](const Type::Arrow& a) {
                   check_well_formed(a.domain, bound);
                   check_well_formed(a.codomain, bound);
                 },
                 [&](const Type::Forall& f) {
                   auto inner = bound;
                   inner.push_back(f.binder);
                   check_well_formed(f.body, inner);
                 },
                 [&](const Type::Set& s) {
                   if (!sets_enabled_) throw Error("ill-formed type: finite sets are not enabled");
                   check_well_formed(s.element, bound);
                 },
             },
             type.node().value);
}

Term polymorphic_and_term() {
  const Type t = Type::prop();
  const Type alpha = Type::var("a");
  const Type beta = Type::var("b");
  const Type xi = Type::var("x");
  const Term conj = Term::constant(names::kAnd, arrows({t, t}, t));
  Term body = apply(conj, {Term::app(Term::var("P"), Term::app(Term::var("f"), Term::var("x"))),
                           Term::app(Term::var("Q"), Term::app(Term::var("g"), Term::var("x")))});
  body = Term::lam("g", Type::arrow(xi, beta), body);
  body = Term::lam("f", Type::arrow(xi, alpha), body);
  body = Term::lam("x", xi, body);
  body = Term::ty_lam("x", body);
  body = Term::lam("Q", Type::arrow(beta, t), body);
  body = Term::lam("P", Type::arrow(alpha, t), body);
  return Term::ty_lam("a", Term::ty_lam("b", body));
}

Signature builtin_signature() {
  Signature sig;
  const Type t = Type::prop();
  const Type alpha = Type::var("a");
  sig.add_constant(names::kAnd, arrows({t, t}, t));
  sig.add_constant(names::kNot, Type::arrow(t, t));
  sig.add_constant(names::kImplies, arrows({t, t}, t));
  const Type quantifier = Type::forall("a", Type::arrow(Type::arrow(alpha, t), t));
  sig.add_constant(names::kForall, quantifier);
  sig.add_constant(names::kExists, quantifier);
  const Type hilbert = Type::forall("a", Type::arrow(Type::arrow(alpha, t), alpha));
  sig.add_constant(names::kEpsilon, hilbert);
  sig.add_constant(names::kTau, hilbert);

  // ∀a.∀b.(a→t)→(b→t)→∀x.x→(x→a)→(x→b)→t, read off the six binders of the term.
  const Type beta = Type::var("b");
  const Type xi = Type::var("x");
  const Type and_type = Type::forall(
      "a", Type::forall("b", arrows({Type::arrow(alpha, t), Type::arrow(beta, t)},
                                    Type::forall("x", arrows({xi, Type::arrow(xi, alpha), Type::arrow(xi, beta)}, t)))));
  sig.add_definition(names::kPolyAnd, and_type, polymorphic_and_term());

  sig.add_alias("and", names::kAnd);
  sig.add_alias("not", names::kNot);
  sig.add_alias("implies", names::kImplies);
  sig.add_alias("forall", names::kForall);
  sig.add_alias("exists", names::kExists);
  sig.add_alias("eps", names::kEpsilon);
  sig.add_alias("tau", names::kTau);
  return sig;
}

}  // namespace glue
