#include "glue/kernel.hpp"

#include <algorithm>

#include "glue/overloaded.hpp"

namespace glue {

// ---------------------------------------------------------------------------
// Context

TypingContext TypingContext::with_var(std::string name, Type type) const {
  TypingContext out = *this;
  out.vars_.emplace_back(std::move(name), std::move(type));
  return out;
}

TypingContext TypingContext::with_type_var(std::string name) const {
  TypingContext out = *this;
  out.type_vars_.push_back(std::move(name));
  return out;
}

std::optional<Type> TypingContext::lookup(const std::string& name) const {
  for (auto it = vars_.rbegin(); it != vars_.rend(); ++it)
    if (it->first == name) return it->second;
  return std::nullopt;
}

bool TypingContext::has_type_var(const std::string& name) const {
  return std::find(type_vars_.begin(), type_vars_.end(), name) != type_vars_.end();
}

// ---------------------------------------------------------------------------
// Typing

const char* to_string(TypeError::Kind kind) {
  switch (kind) {
    case TypeError::Kind::TypeMismatch:
      return "TypeMismatch";
    case TypeError::Kind::UnboundVariable:
      return "UnboundVariable";
    case TypeError::Kind::IllFormedType:
      return "IllFormedType";
    case TypeError::Kind::UnknownConstant:
      return "UnknownConstant";
  }
  return "TypeError";
}

namespace {

std::string join_path(const std::vector<std::string>& path) {
  if (path.empty()) return "root";
  std::string out = "root";
  for (const auto& step : path) out += "." + step;
  return out;
}

std::string describe(TypeError::Kind kind, const std::string& expected, const std::string& found,
                     const std::vector<std::string>& path) {
  std::string out = to_string(kind);
  out += " at " + join_path(path);
  if (!expected.empty()) out += ": expected " + expected;
  if (!found.empty()) out += (expected.empty() ? ": " : ", found ") + found;
  return out;
}

}  // namespace

TypeError::TypeError(Kind kind, std::string expected, std::string found, std::vector<std::string> path)
    : Error(describe(kind, expected, found, path)),
      kind_(kind),
      expected_(std::move(expected)),
      found_(std::move(found)),
      path_(std::move(path)) {}

std::string TypeError::path_string() const { return join_path(path_); }

namespace {

struct Checker {
  const Signature& sig;
  std::vector<std::string> path;

  void well_formed(const TypingContext& ctx, const Type& type) {
    try {
      sig.check_well_formed(type, ctx.type_vars());
    } catch (const Error& e) {
      throw TypeError(TypeError::Kind::IllFormedType, "", print_type(type) + " (" + e.what() + ")", path);
    }
  }

  Type check(const TypingContext& ctx, const Term& term) {
    return std::visit(
        overloaded{
            [&](const Term::Var& v) -> Type {
              if (auto type = ctx.lookup(v.name)) return *type;
              throw TypeError(TypeError::Kind::UnboundVariable, "", v.name, path);
            },
            [&](const Term::Const& c) -> Type {
              auto declared = sig.lookup(c.name);
              if (!declared) throw TypeError(TypeError::Kind::UnknownConstant, "", c.name, path);
              if (!alpha_eq(*declared, c.type))
                throw TypeError(TypeError::Kind::TypeMismatch, print_type(*declared), print_type(c.type), path);
              return c.type;
            },
            [&](const Term::Lam& l) -> Type {
              well_formed(ctx, l.binder_type);
              path.push_back("body");
              Type body = check(ctx.with_var(l.binder, l.binder_type), l.body);
              path.pop_back();
              return Type::arrow(l.binder_type, body);
            },
            [&](const Term::App& a) -> Type {
              path.push_back("fn");
              Type fn = check(ctx, a.fn);
              path.pop_back();
              path.push_back("arg");
              Type arg = check(ctx, a.arg);
              const auto* arrow = fn.get<Type::Arrow>();
              if (arrow == nullptr)
                throw TypeError(TypeError::Kind::TypeMismatch, "a function type", print_type(fn), path);
              if (!alpha_eq(arrow->domain, arg))
                throw TypeError(TypeError::Kind::TypeMismatch, print_type(arrow->domain), print_type(arg), path);
              path.pop_back();
              return arrow->codomain;
            },
            [&](const Term::TyLam& l) -> Type {
              std::string binder = l.binder;
              Term body = l.body;
              if (ctx.has_type_var(binder)) {
                auto body_free = free_type_vars(body);
                binder = fresh_name(binder, [&](const std::string& c) {
                  return ctx.has_type_var(c) || body_free.contains(c);
                });
                body = substitute_ty(body, l.binder, Type::var(binder));
              }
              path.push_back("body");
              Type inner = check(ctx.with_type_var(binder), body);
              path.pop_back();
              return Type::forall(binder, inner);
            },
            [&](const Term::TyApp& a) -> Type {
              path.push_back("fn");
              Type fn = check(ctx, a.fn);
              path.pop_back();
              well_formed(ctx, a.type_arg);
              const auto* all = fn.get<Type::Forall>();
              if (all == nullptr)
                throw TypeError(TypeError::Kind::TypeMismatch, "a polymorphic type", print_type(fn), path);
              return substitute_type(all->body, all->binder, a.type_arg);
            },
        },
        term.node().value);
  }
};

}  // namespace

Type typecheck(const TypingContext& ctx, const Term& term, const Signature& sig) {
  Checker checker{sig, {}};
  return checker.check(ctx, term);
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

struct TermSubst {
  const std::string& name;
  const Term& replacement;
  std::set<std::string> free;
  std::set<std::string> free_ty;

  Term operator()(const Term& term) const {
    return std::visit(
        overloaded{
            [&](const Term::Var& v) { return v.name == name ? replacement : term; },
            [&](const Term::Const&) { return term; },
            [&](const Term::Lam& l) {
              if (l.binder == name) return term;
              if (!free.contains(l.binder)) return Term::lam(l.binder, l.binder_type, (*this)(l.body));
              auto body_free = free_vars(l.body);
              if (!body_free.contains(name)) return term;
              auto renamed = fresh_name(l.binder, [&](const std::string& c) {
                return free.contains(c) || body_free.contains(c) || c == name;
              });
              Term body = substitute(l.body, l.binder, Term::var(renamed));
              return Term::lam(renamed, l.binder_type, (*this)(body));
            },
            [&](const Term::App& a) { return Term::app((*this)(a.fn), (*this)(a.arg)); },
            [&](const Term::TyLam& l) {
              if (!free_ty.contains(l.binder)) return Term::ty_lam(l.binder, (*this)(l.body));
              auto body_free = free_type_vars(l.body);
              auto renamed = fresh_name(l.binder, [&](const std::string& c) {
                return free_ty.contains(c) || body_free.contains(c);
              });
              Term body = substitute_ty(l.body, l.binder, Type::var(renamed));
              return Term::ty_lam(renamed, (*this)(body));
            },
            [&](const Term::TyApp& a) { return Term::ty_app((*this)(a.fn), a.type_arg); },
        },
        term.node().value);
  }
};

struct TypeSubst {
  const std::string& name;
  const Type& replacement;
  std::set<std::string> free_ty;

  Term operator()(const Term& term) const {
    return std::visit(
        overloaded{
            [&](const Term::Var&) { return term; },
            [&](const Term::Const&) { return term; },
            [&](const Term::Lam& l) {
              return Term::lam(l.binder, substitute_type(l.binder_type, name, replacement), (*this)(l.body));
            },
            [&](const Term::App& a) { return Term::app((*this)(a.fn), (*this)(a.arg)); },
            [&](const Term::TyLam& l) {
              if (l.binder == name) return term;
              if (!free_ty.contains(l.binder)) return Term::ty_lam(l.binder, (*this)(l.body));
              auto body_free = free_type_vars(l.body);
              auto renamed = fresh_name(l.binder, [&](const std::string& c) {
                return free_ty.contains(c) || body_free.contains(c) || c == name;
              });
              Term body = substitute_ty(l.body, l.binder, Type::var(renamed));
              return Term::ty_lam(renamed, (*this)(body));
            },
            [&](const Term::TyApp& a) {
              return Term::ty_app((*this)(a.fn), substitute_type(a.type_arg, name, replacement));
            },
        },
        term.node().value);
  }
};

}  // namespace

Term substitute(const Term& term, const std::string& name, const Term& replacement) {
  return TermSubst{name, replacement, free_vars(replacement), free_type_vars(replacement)}(term);
}

Term substitute_ty(const Term& term, const std::string& type_var, const Type& replacement) {
  return TypeSubst{type_var, replacement, free_type_vars(replacement)}(term);
}

Term unfold_definitions(const Term& term, const Signature& sig) {
  return std::visit(
      overloaded{
          [&](const Term::Var&) { return term; },
          [&](const Term::Const& c) {
            if (const Term* body = sig.definition(c.name)) return unfold_definitions(*body, sig);
            return term;
          },
          [&](const Term::Lam& l) { return Term::lam(l.binder, l.binder_type, unfold_definitions(l.body, sig)); },
          [&](const Term::App& a) { return Term::app(unfold_definitions(a.fn, sig), unfold_definitions(a.arg, sig)); },
          [&](const Term::TyLam& l) { return Term::ty_lam(l.binder, unfold_definitions(l.body, sig)); },
          [&](const Term::TyApp& a) { return Term::ty_app(unfold_definitions(a.fn, sig), a.type_arg); },
      },
      term.node().value);
}

// ---------------------------------------------------------------------------
// Reduction

std::optional<Term> contract_recursor(const Term& term, const Signature& sig) {
  if (!term.is<Term::App>() || sig.rules().empty()) return std::nullopt;
  Spine spine = decompose_spine(term);
  const auto* head = spine.head.get<Term::Const>();
  if (head == nullptr) return std::nullopt;
  for (const auto& rule : sig.rules()) {
    if (rule.recursor != head->name) continue;
    if (spine.args.size() != rule.type_args + rule.term_args + 1) continue;
    RedexMatch match{spine.head, {}, {}, spine.head, {}, {}};
    bool shape_ok = true;
    for (std::size_t i = 0; i < spine.args.size() - 1; ++i) {
      const auto& arg = spine.args[i];
      bool want_type = i < rule.type_args;
      if (arg.is_type != want_type) {
        shape_ok = false;
        break;
      }
      if (want_type)
        match.type_args.push_back(arg.type());
      else
        match.args.push_back(arg.term());
    }
    if (!shape_ok || spine.args.back().is_type) continue;
    Spine scrutinee = decompose_spine(spine.args.back().term());
    const auto* ctor = scrutinee.head.get<Term::Const>();
    if (ctor == nullptr || ctor->name != rule.constructor) continue;
    if (scrutinee.args.size() != rule.ctor_type_args + rule.ctor_term_args) continue;
    for (std::size_t i = 0; i < scrutinee.args.size(); ++i) {
      const auto& arg = scrutinee.args[i];
      bool want_type = i < rule.ctor_type_args;
      if (arg.is_type != want_type) {
        shape_ok = false;
        break;
      }
      if (want_type)
        match.ctor_type_args.push_back(arg.type());
      else
        match.ctor_args.push_back(arg.term());
    }
    if (!shape_ok) continue;
    match.constructor = scrutinee.head;
    return rule.rewrite(match);
  }
  return std::nullopt;
}

namespace {

std::optional<Term> contract_root(const Term& term, const Signature& sig) {
  if (const auto* a = term.get<Term::App>()) {
    if (const auto* l = a->fn.get<Term::Lam>()) return substitute(l->body, l->binder, a->arg);
    return contract_recursor(term, sig);
  }
  if (const auto* a = term.get<Term::TyApp>()) {
    if (const auto* l = a->fn.get<Term::TyLam>()) return substitute_ty(l->body, l->binder, a->type_arg);
  }
  return std::nullopt;
}

std::optional<Term> reduce_lo(const Term& term, const Signature& sig) {
  if (auto r = contract_root(term, sig)) return r;
  return std::visit(
      overloaded{
          [&](const Term::Var&) -> std::optional<Term> { return std::nullopt; },
          [&](const Term::Const&) -> std::optional<Term> { return std::nullopt; },
          [&](const Term::Lam& l) -> std::optional<Term> {
            if (auto b = reduce_lo(l.body, sig)) return Term::lam(l.binder, l.binder_type, *b);
            return std::nullopt;
          },
          [&](const Term::App& a) -> std::optional<Term> {
            if (auto f = reduce_lo(a.fn, sig)) return Term::app(*f, a.arg);
            if (auto x = reduce_lo(a.arg, sig)) return Term::app(a.fn, *x);
            return std::nullopt;
          },
          [&](const Term::TyLam& l) -> std::optional<Term> {
            if (auto b = reduce_lo(l.body, sig)) return Term::ty_lam(l.binder, *b);
            return std::nullopt;
          },
          [&](const Term::TyApp& a) -> std::optional<Term> {
            if (auto f = reduce_lo(a.fn, sig)) return Term::ty_app(*f, a.type_arg);
            return std::nullopt;
          },
      },
      term.node().value);
}

std::optional<Term> reduce_ri(const Term& term, const Signature& sig) {
  auto inner = std::visit(
      overloaded{
          [&](const Term::Var&) -> std::optional<Term> { return std::nullopt; },
          [&](const Term::Const&) -> std::optional<Term> { return std::nullopt; },
          [&](const Term::Lam& l) -> std::optional<Term> {
            if (auto b = reduce_ri(l.body, sig)) return Term::lam(l.binder, l.binder_type, *b);
            return std::nullopt;
          },
          [&](const Term::App& a) -> std::optional<Term> {
            if (auto x = reduce_ri(a.arg, sig)) return Term::app(a.fn, *x);
            if (auto f = reduce_ri(a.fn, sig)) return Term::app(*f, a.arg);
            return std::nullopt;
          },
          [&](const Term::TyLam& l) -> std::optional<Term> {
            if (auto b = reduce_ri(l.body, sig)) return Term::ty_lam(l.binder, *b);
            return std::nullopt;
          },
          [&](const Term::TyApp& a) -> std::optional<Term> {
            if (auto f = reduce_ri(a.fn, sig)) return Term::ty_app(*f, a.type_arg);
            return std::nullopt;
          },
      },
      term.node().value);
  if (inner) return inner;
  return contract_root(term, sig);
}

struct Normalizer {
  const Signature& sig;
  std::size_t fuel;
  std::size_t steps = 0;

  void tick() {
    if (++steps > fuel) throw FuelExhausted(fuel);
  }

  Term norm(const Term& term) {
    return std::visit(
        overloaded{
            [&](const Term::Var&) { return term; },
            [&](const Term::Const&) { return term; },
            [&](const Term::Lam& l) { return Term::lam(l.binder, l.binder_type, norm(l.body)); },
            [&](const Term::TyLam& l) { return Term::ty_lam(l.binder, norm(l.body)); },
            [&](const Term::App& a) {
              Term fn = norm(a.fn);
              Term arg = norm(a.arg);
              if (const auto* l = fn.get<Term::Lam>()) {
                tick();
                return norm(substitute(l->body, l->binder, arg));
              }
              Term app = Term::app(fn, arg);
              if (auto contractum = contract_recursor(app, sig)) {
                tick();
                return norm(*contractum);
              }
              return app;
            },
            [&](const Term::TyApp& a) {
              Term fn = norm(a.fn);
              if (const auto* l = fn.get<Term::TyLam>()) {
                tick();
                return norm(substitute_ty(l->body, l->binder, a.type_arg));
              }
              return Term::ty_app(fn, a.type_arg);
            },
        },
        term.node().value);
  }
};

}  // namespace

std::optional<Term> reduce_once(const Term& term, const Signature& sig, Strategy strategy) {
  return strategy == Strategy::LeftmostOutermost ? reduce_lo(term, sig) : reduce_ri(term, sig);
}

NormalForm normalize(const Term& term, const Signature& sig, std::size_t fuel) {
  Normalizer n{sig, fuel};
  Term out = n.norm(term);
  return NormalForm{out, false, true, n.steps};
}

bool is_beta_normal(const Term& term, const Signature& sig) {
  if (contract_root(term, sig)) return false;
  return std::visit(overloaded{
                        [&](const Term::Var&) { return true; },
                        [&](const Term::Const&) { return true; },
                        [&](const Term::Lam& l) { return is_beta_normal(l.body, sig); },
                        [&](const Term::App& a) { return is_beta_normal(a.fn, sig) && is_beta_normal(a.arg, sig); },
                        [&](const Term::TyLam& l) { return is_beta_normal(l.body, sig); },
                        [&](const Term::TyApp& a) { return is_beta_normal(a.fn, sig); },
                    },
                    term.node().value);
}

// ---------------------------------------------------------------------------
// η-long forms

namespace {

Type head_type(const TypingContext& ctx, const Term& head) {
  if (const auto* v = head.get<Term::Var>()) {
    if (auto type = ctx.lookup(v->name)) return *type;
    throw TypeError(TypeError::Kind::UnboundVariable, "", v->name, {});
  }
  if (const auto* c = head.get<Term::Const>()) return c->type;
  throw Error("eta_expand: term is not beta-normal (abstraction in head position)");
}

struct Expander {
  const Signature& sig;

  Term expand(const TypingContext& ctx, const Term& term, const Type& type) {
    if (const auto* arrow = type.get<Type::Arrow>()) {
      if (const auto* l = term.get<Term::Lam>())
        return Term::lam(l->binder, l->binder_type, expand(ctx.with_var(l->binder, l->binder_type), l->body, arrow->codomain));
      auto term_free = free_vars(term);
      auto x = fresh_name("x", [&](const std::string& c) { return ctx.binds(c) || term_free.contains(c); });
      return Term::lam(x, arrow->domain,
                       expand(ctx.with_var(x, arrow->domain), Term::app(term, Term::var(x)), arrow->codomain));
    }
    if (const auto* all = type.get<Type::Forall>()) {
      if (const auto* l = term.get<Term::TyLam>())
        return Term::ty_lam(l->binder, expand(ctx.with_type_var(l->binder), l->body,
                                              substitute_type(all->body, all->binder, Type::var(l->binder))));
      auto term_free = free_type_vars(term);
      auto a = fresh_name(all->binder,
                          [&](const std::string& c) { return ctx.has_type_var(c) || term_free.contains(c); });
      return Term::ty_lam(a, expand(ctx.with_type_var(a), Term::ty_app(term, Type::var(a)),
                                    substitute_type(all->body, all->binder, Type::var(a))));
    }
    // Atomic type: a neutral spine whose term arguments are expanded at their domains.
    Spine spine = decompose_spine(term);
    Type cur = head_type(ctx, spine.head);
    std::vector<SpineArg> args;
    args.reserve(spine.args.size());
    for (const auto& arg : spine.args) {
      if (arg.is_type) {
        const auto& all = cur.as<Type::Forall>();
        cur = substitute_type(all.body, all.binder, arg.type());
        args.push_back(arg);
      } else {
        const auto& arrow = cur.as<Type::Arrow>();
        args.push_back(SpineArg{false, expand(ctx, arg.term(), arrow.domain)});
        cur = arrow.codomain;
      }
    }
    return rebuild_spine(spine.head, args);
  }
};

bool eta_long_at(const TypingContext& ctx, const Term& term, const Type& type) {
  if (const auto* arrow = type.get<Type::Arrow>()) {
    const auto* l = term.get<Term::Lam>();
    return l != nullptr && eta_long_at(ctx.with_var(l->binder, l->binder_type), l->body, arrow->codomain);
  }
  if (const auto* all = type.get<Type::Forall>()) {
    const auto* l = term.get<Term::TyLam>();
    return l != nullptr && eta_long_at(ctx.with_type_var(l->binder), l->body,
                                       substitute_type(all->body, all->binder, Type::var(l->binder)));
  }
  Spine spine = decompose_spine(term);
  if (!spine.head.is<Term::Var>() && !spine.head.is<Term::Const>()) return false;
  Type cur = head_type(ctx, spine.head);
  for (const auto& arg : spine.args) {
    if (arg.is_type) {
      const auto& all = cur.as<Type::Forall>();
      cur = substitute_type(all.body, all.binder, arg.type());
    } else {
      const auto& arrow = cur.as<Type::Arrow>();
      if (!eta_long_at(ctx, arg.term(), arrow.domain)) return false;
      cur = arrow.codomain;
    }
  }
  return true;
}

}  // namespace

NormalForm eta_expand(const TypingContext& ctx, const Term& term, const Signature& sig) {
  Type type = typecheck(ctx, term, sig);
  Expander expander{sig};
  return NormalForm{expander.expand(ctx, term, type), true, true, 0};
}

bool is_eta_long(const TypingContext& ctx, const Term& term, const Signature& sig) {
  Type type = typecheck(ctx, term, sig);
  return eta_long_at(ctx, term, type);
}

}  // namespace glue
