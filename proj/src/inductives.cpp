#include "glue/inductives.hpp"

#include "glue/error.hpp"

namespace glue {

namespace {

Type rec_nat_type() {
  const Type a = Type::var("a");
  const Type n = nat_type();
  return Type::forall("a", arrows({a, arrows({n, a}, a), n}, a));
}

Type empty_set_type() { return Type::forall("a", Type::set_of(Type::var("a"))); }

Type insert_set_type() {
  const Type a = Type::var("a");
  return Type::forall("a", arrows({a, Type::set_of(a)}, Type::set_of(a)));
}

Type fold_set_type() {
  const Type a = Type::var("a");
  const Type b = Type::var("b");
  return Type::forall("a", Type::forall("b", arrows({b, arrows({a, b}, b), Type::set_of(a)}, b)));
}

}  // namespace

Type nat_type() { return Type::entity(names::kNatSort); }

Term zero() { return Term::constant(names::kZero, nat_type()); }

Term succ(Term n) { return Term::app(Term::constant(names::kSucc, Type::arrow(nat_type(), nat_type())), std::move(n)); }

Term numeral(std::size_t n) {
  Term out = zero();
  for (std::size_t i = 0; i < n; ++i) out = succ(out);
  return out;
}

std::optional<std::size_t> numeral_value(const Term& term) {
  std::size_t n = 0;
  Term cur = term;
  while (const auto* a = cur.get<Term::App>()) {
    const auto* head = a->fn.get<Term::Const>();
    if (head == nullptr || head->name != names::kSucc) return std::nullopt;
    ++n;
    cur = a->arg;
  }
  const auto* c = cur.get<Term::Const>();
  if (c == nullptr || c->name != names::kZero) return std::nullopt;
  return n;
}

Term rec_nat(const Type& result, Term base, Term step, Term scrutinee) {
  Term head = Term::ty_app(Term::constant(names::kRecN, rec_nat_type()), result);
  return apply(head, {std::move(base), std::move(step), std::move(scrutinee)});
}

Term empty_set(const Type& element) { return Term::ty_app(Term::constant(names::kEmptyS, empty_set_type()), element); }

Term insert_set(const Type& element, Term x, Term xs) {
  Term head = Term::ty_app(Term::constant(names::kInsertS, insert_set_type()), element);
  return apply(head, {std::move(x), std::move(xs)});
}

Term fold_set(const Type& element, const Type& result, Term base, Term step, Term scrutinee) {
  Term head = Term::ty_app(Term::ty_app(Term::constant(names::kFoldS, fold_set_type()), element), result);
  return apply(head, {std::move(base), std::move(step), std::move(scrutinee)});
}

Term nat_addition() {
  const Type n = nat_type();
  Term step = Term::lam("k", n, Term::lam("a", n, succ(Term::var("a"))));
  Term body = rec_nat(n, Term::var("n"), step, Term::var("m"));
  return Term::lam("m", n, Term::lam("n", n, body));
}

Signature register_nat(Signature sig) {
  sig.add_sort(names::kNatSort);
  const Type n = nat_type();
  sig.add_constant(names::kZero, n);
  sig.add_constant(names::kSucc, Type::arrow(n, n));
  sig.add_constant(names::kRecN, rec_nat_type());

  sig.add_rule(InductiveRule{names::kRecN, 1, 2, names::kZero, 0, 0,
                             [](const RedexMatch& m) { return m.args[0]; }});
  sig.add_rule(InductiveRule{names::kRecN, 1, 2, names::kSucc, 0, 1, [](const RedexMatch& m) {
                               const Term& base = m.args[0];
                               const Term& step = m.args[1];
                               const Term& pred = m.ctor_args[0];
                               Term recurse = apply(Term::ty_app(m.recursor, m.type_args[0]), {base, step, pred});
                               return apply(step, {pred, recurse});
                             }});
  return sig;
}

Signature register_finset(Signature sig) {
  if (sig.sets_enabled()) throw SortClash("set");
  sig.enable_sets();
  sig.add_constant(names::kEmptyS, empty_set_type());
  sig.add_constant(names::kInsertS, insert_set_type());
  sig.add_constant(names::kFoldS, fold_set_type());

  sig.add_rule(InductiveRule{names::kFoldS, 2, 2, names::kEmptyS, 1, 0,
                             [](const RedexMatch& m) { return m.args[0]; }});
  sig.add_rule(InductiveRule{names::kFoldS, 2, 2, names::kInsertS, 1, 2, [](const RedexMatch& m) {
                               const Term& base = m.args[0];
                               const Term& step = m.args[1];
                               const Term& x = m.ctor_args[0];
                               const Term& rest = m.ctor_args[1];
                               Term head = Term::ty_app(Term::ty_app(m.recursor, m.type_args[0]), m.type_args[1]);
                               return apply(step, {x, apply(head, {base, step, rest})});
                             }});
  return sig;
}

OrthogonalityReport check_orthogonality(const std::vector<InductiveRule>& rules) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i; j < rules.size(); ++j) {
      const auto& a = rules[i];
      const auto& b = rules[j];
      bool root_overlap = i != j && a.recursor == b.recursor && a.constructor == b.constructor;
      bool nested_overlap = a.constructor == b.recursor || b.constructor == a.recursor;
      if (root_overlap || nested_overlap) return {std::make_pair(i, j)};
    }
  }
  return {};
}

}  // namespace glue
