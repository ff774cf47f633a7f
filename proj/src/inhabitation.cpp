#include "glue/inhabitation.hpp"

#include <functional>

#include "glue/error.hpp"
#include "glue/kernel.hpp"
#include "glue/overloaded.hpp"

namespace glue {

namespace {

using Emit = std::function<void(const Term&)>;

void subterms(const Type& type, std::vector<Type>& out) {
  out.push_back(type);
  std::visit(overloaded{
                 [](const Type::Base&) {},
                 [](const Type::Var&) {},
                 [&](const Type::Arrow& a) {
                   subterms(a.domain, out);
                   subterms(a.codomain, out);
                 },
                 [&](const Type::Forall& f) { subterms(f.body, out); },
                 [&](const Type::Set& s) { subterms(s.element, out); },
             },
             type.node().value);
}

bool atomic(const Type& type) { return !type.get<Type::Arrow>() && !type.get<Type::Forall>(); }

class Search {
 public:
  explicit Search(Type target) : target_(std::move(target)) {}

  // Terms of `goal` with exactly `size` nodes.
  void intro(const TypingContext& ctx, const Type& goal, std::size_t size, const Emit& emit) {
    if (size == 0) return;
    if (const auto* arrow = goal.get<Type::Arrow>()) {
      std::string x = fresh_name("x", [&](const std::string& n) { return ctx.binds(n); });
      TypingContext inner = ctx.with_var(x, arrow->domain);
      intro(inner, arrow->codomain, size - 1, [&](const Term& body) { emit(Term::lam(x, arrow->domain, body)); });
      return;
    }
    if (const auto* all = goal.get<Type::Forall>()) {
      std::string a = fresh_name(all->binder, [&](const std::string& n) { return ctx.has_type_var(n); });
      Type body = a == all->binder ? all->body : substitute_type(all->body, all->binder, Type::var(a));
      intro(ctx.with_type_var(a), body, size - 1, [&](const Term& m) { emit(Term::ty_lam(a, m)); });
      return;
    }
    std::vector<Type> pool = type_pool(ctx, goal);
    // Binder names are always fresh, so every context entry is a usable head.
    for (const auto& [name, type] : ctx.vars()) spine(ctx, pool, type, Term::var(name), size - 1, goal, emit);
  }

 private:
  // Extends `head` (already of type `cur`) with arguments using exactly `budget` more nodes.
  void spine(const TypingContext& ctx, const std::vector<Type>& pool, const Type& cur, const Term& head,
             std::size_t budget, const Type& goal, const Emit& emit) {
    if (atomic(cur)) {
      if (budget == 0 && alpha_eq(cur, goal)) emit(head);
      return;
    }
    if (budget == 0) return;
    if (const auto* arrow = cur.get<Type::Arrow>()) {
      for (std::size_t s = 1; s + 1 <= budget; ++s) {
        intro(ctx, arrow->domain, s, [&](const Term& arg) {
          spine(ctx, pool, arrow->codomain, Term::app(head, arg), budget - 1 - s, goal, emit);
        });
      }
      return;
    }
    const auto& all = cur.as<Type::Forall>();
    for (const auto& t : pool)
      spine(ctx, pool, substitute_type(all.body, all.binder, t), Term::ty_app(head, t), budget - 1, goal, emit);
  }

  std::vector<Type> type_pool(const TypingContext& ctx, const Type& goal) const {
    std::vector<Type> candidates;
    for (const auto& a : ctx.type_vars()) candidates.push_back(Type::var(a));
    subterms(goal, candidates);
    subterms(target_, candidates);
    for (const auto& [name, type] : ctx.vars()) subterms(type, candidates);
    std::vector<Type> pool;
    for (const auto& t : candidates) {
      bool scoped = true;
      for (const auto& v : free_type_vars(t)) scoped = scoped && ctx.has_type_var(v);
      if (!scoped) continue;
      bool seen = false;
      for (const auto& p : pool) seen = seen || alpha_eq(p, t);
      if (!seen) pool.push_back(t);
    }
    return pool;
  }

  Type target_;
};

}  // namespace

std::vector<Term> inhabitants(const Type& target, std::size_t max_size) {
  if (!free_type_vars(target).empty()) throw Error("search target must be closed: " + print_type(target));
  Search search(target);
  std::vector<Term> found;
  for (std::size_t n = 1; n <= max_size; ++n)
    search.intro(TypingContext{}, target, n, [&](const Term& m) { found.push_back(m); });
  return found;
}

}  // namespace glue
