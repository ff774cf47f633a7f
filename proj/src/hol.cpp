#include "glue/hol.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "glue/overloaded.hpp"
#include "glue/parse.hpp"
#include "glue/sexpr.hpp"

namespace glue::hol {

HolTerm::HolTerm(Var v) : node_(std::make_shared<const HolTermNode>(HolTermNode{std::move(v)})) {}
HolTerm::HolTerm(ConstApp c) : node_(std::make_shared<const HolTermNode>(HolTermNode{std::move(c)})) {}
HolTerm::HolTerm(Hilbert h) : node_(std::make_shared<const HolTermNode>(HolTermNode{std::move(h)})) {}
HolTerm::HolTerm(Abs a) : node_(std::make_shared<const HolTermNode>(HolTermNode{std::move(a)})) {}
HolTerm::HolTerm(Prop p) : node_(std::make_shared<const HolTermNode>(HolTermNode{std::move(p)})) {}

Formula::Formula(Atom a) : node_(std::make_shared<const FormulaNode>(FormulaNode{std::move(a)})) {}
Formula::Formula(Conn c) : node_(std::make_shared<const FormulaNode>(FormulaNode{std::move(c)})) {}
Formula::Formula(Quant q) : node_(std::make_shared<const FormulaNode>(FormulaNode{std::move(q)})) {}

const char* to_string(ExtractionError::Kind kind) {
  switch (kind) {
    case ExtractionError::Kind::NotNormal:
      return "NotNormal";
    case ExtractionError::Kind::NotPropType:
      return "NotPropType";
    case ExtractionError::Kind::UnexpectedHead:
      return "UnexpectedHead";
  }
  return "ExtractionError";
}

ExtractionError::ExtractionError(Kind kind, const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

// ---------------------------------------------------------------------------
// Extraction

namespace {

using Scope = TypingContext;

Type step_type(const Type& cur, const SpineArg& arg) {
  if (arg.is_type) {
    const auto& all = cur.as<Type::Forall>();
    return substitute_type(all.body, all.binder, arg.type());
  }
  return cur.as<Type::Arrow>().codomain;
}

struct Extractor {
  const Signature& sig;

  std::vector<HolTerm> term_args(const Scope& scope, Type cur, const std::vector<SpineArg>& args,
                                 std::vector<Type>& type_args) {
    std::vector<HolTerm> out;
    for (const auto& a : args) {
      if (a.is_type)
        type_args.push_back(a.type());
      else
        out.push_back(term(scope, a.term(), cur.as<Type::Arrow>().domain));
      cur = step_type(cur, a);
    }
    return out;
  }

  // `quantifier [T] (λx:T. body)` with nothing else applied.
  static const Term::Lam* binder_shape(const Spine& spine) {
    if (spine.args.size() != 2 || !spine.args[0].is_type || spine.args[1].is_type) return nullptr;
    return spine.args[1].term().get<Term::Lam>();
  }

  Formula formula(const Scope& scope, const Term& m) {
    Spine spine = decompose_spine(m);
    if (const auto* c = spine.head.get<Term::Const>()) {
      const std::string& name = c->name;
      auto arg_formula = [&](std::size_t i) { return formula(scope, spine.args[i].term()); };
      bool all_terms = std::none_of(spine.args.begin(), spine.args.end(), [](const auto& a) { return a.is_type; });
      if (name == names::kAnd && spine.args.size() == 2 && all_terms)
        return Formula::Conn{Formula::Conn::Op::And, {arg_formula(0), arg_formula(1)}};
      if (name == names::kImplies && spine.args.size() == 2 && all_terms)
        return Formula::Conn{Formula::Conn::Op::Implies, {arg_formula(0), arg_formula(1)}};
      if (name == names::kNot && spine.args.size() == 1 && all_terms)
        return Formula::Conn{Formula::Conn::Op::Not, {arg_formula(0)}};
      if (name == names::kForall || name == names::kExists) {
        if (const auto* lam = binder_shape(spine)) {
          auto kind = name == names::kForall ? Formula::Quant::Kind::Forall : Formula::Quant::Kind::Exists;
          Formula body = formula(scope.with_var(lam->binder, lam->binder_type), lam->body);
          return Formula::Quant{kind, lam->binder, lam->binder_type,
                                std::make_shared<const FormulaNode>(body.node())};
        }
      }
      Formula::Atom atom{name, false, c->type, {}, {}};
      atom.args = term_args(scope, c->type, spine.args, atom.type_args);
      return atom;
    }
    if (const auto* v = spine.head.get<Term::Var>()) {
      auto type = scope.lookup(v->name);
      if (!type) throw ExtractionError(ExtractionError::Kind::UnexpectedHead, "free variable " + v->name + " heads a spine");
      Formula::Atom atom{v->name, true, *type, {}, {}};
      atom.args = term_args(scope, *type, spine.args, atom.type_args);
      return atom;
    }
    throw ExtractionError(ExtractionError::Kind::NotNormal, print_term(m));
  }

  HolTerm term(const Scope& scope, const Term& m, const Type& type) {
    if (type.is_prop()) return HolTerm::Prop{std::make_shared<const FormulaNode>(formula(scope, m).node())};
    if (const auto* lam = m.get<Term::Lam>()) {
      const Type& codomain = type.as<Type::Arrow>().codomain;
      HolTerm body = term(scope.with_var(lam->binder, lam->binder_type), lam->body, codomain);
      return HolTerm::Abs{lam->binder, lam->binder_type, std::make_shared<const HolTermNode>(body.node())};
    }
    Spine spine = decompose_spine(m);
    if (const auto* c = spine.head.get<Term::Const>()) {
      if (c->name == names::kEpsilon || c->name == names::kTau) {
        if (const auto* lam = binder_shape(spine)) {
          auto kind = c->name == names::kEpsilon ? HolTerm::Hilbert::Kind::Epsilon : HolTerm::Hilbert::Kind::Tau;
          Formula body = formula(scope.with_var(lam->binder, lam->binder_type), lam->body);
          return HolTerm::Hilbert{kind, lam->binder, lam->binder_type, std::make_shared<const FormulaNode>(body.node())};
        }
      }
      HolTerm::ConstApp app{c->name, c->type, {}, {}};
      app.args = term_args(scope, c->type, spine.args, app.type_args);
      return app;
    }
    if (const auto* v = spine.head.get<Term::Var>()) {
      auto vt = scope.lookup(v->name);
      if (!vt) throw ExtractionError(ExtractionError::Kind::UnexpectedHead, "free variable " + v->name + " heads a spine");
      std::vector<Type> type_args;
      HolTerm::Var var{v->name, *vt, {}};
      var.args = term_args(scope, *vt, spine.args, type_args);
      if (!type_args.empty())
        throw ExtractionError(ExtractionError::Kind::UnexpectedHead, "type application of variable " + v->name);
      return var;
    }
    throw ExtractionError(ExtractionError::Kind::NotNormal, print_term(m));
  }
};

}  // namespace

Formula extract_formula(const Term& term, const Signature& sig) {
  Type type = typecheck(term, sig);
  if (!type.is_prop()) throw ExtractionError(ExtractionError::Kind::NotPropType, print_type(type));
  if (!is_beta_normal(term, sig)) throw ExtractionError(ExtractionError::Kind::NotNormal, "term has a redex");
  if (!is_eta_long(term, sig)) throw ExtractionError(ExtractionError::Kind::NotNormal, "term is not eta-long");
  return Extractor{sig}.formula(TypingContext{}, term);
}

Formula extract_formula(const NormalForm& normal, const Signature& sig) { return extract_formula(normal.term, sig); }

// ---------------------------------------------------------------------------
// Read-back

namespace {

Term constant(const Signature& sig, const char* name) { return Term::constant(name, *sig.lookup(name)); }

Term read_back_term(const HolTerm& t, const Signature& sig);

Term binder_term(const Signature& sig, const char* name, const std::string& var, const Type& sort, const Term& body) {
  return Term::app(Term::ty_app(constant(sig, name), sort), Term::lam(var, sort, body));
}

Term apply_all(Term head, const std::vector<Type>& type_args, const std::vector<HolTerm>& args, const Signature& sig) {
  for (const auto& t : type_args) head = Term::ty_app(head, t);
  for (const auto& a : args) head = Term::app(head, read_back_term(a, sig));
  return head;
}

Term read_back_term(const HolTerm& t, const Signature& sig) {
  return std::visit(
      overloaded{
          [&](const HolTerm::Var& v) { return apply_all(Term::var(v.name), {}, v.args, sig); },
          [&](const HolTerm::ConstApp& c) { return apply_all(Term::constant(c.name, c.type), c.type_args, c.args, sig); },
          [&](const HolTerm::Hilbert& h) {
            const char* name = h.kind == HolTerm::Hilbert::Kind::Epsilon ? names::kEpsilon : names::kTau;
            return binder_term(sig, name, h.var, h.sort, read_back(body_of(h), sig));
          },
          [&](const HolTerm::Abs& a) { return Term::lam(a.var, a.type, read_back_term(body_of(a), sig)); },
          [&](const HolTerm::Prop& p) { return read_back(body_of(p), sig); },
      },
      t.node().value);
}

}  // namespace

Term read_back(const Formula& f, const Signature& sig) {
  return std::visit(
      overloaded{
          [&](const Formula::Atom& a) {
            Term head = a.head_is_variable ? Term::var(a.head) : Term::constant(a.head, a.head_type);
            return apply_all(head, a.type_args, a.args, sig);
          },
          [&](const Formula::Conn& c) {
            const char* name = c.op == Formula::Conn::Op::And       ? names::kAnd
                               : c.op == Formula::Conn::Op::Implies ? names::kImplies
                                                                    : names::kNot;
            Term out = constant(sig, name);
            for (const auto& a : c.args) out = Term::app(out, read_back(a, sig));
            return out;
          },
          [&](const Formula::Quant& q) {
            const char* name = q.kind == Formula::Quant::Kind::Forall ? names::kForall : names::kExists;
            return binder_term(sig, name, q.var, q.sort, read_back(body_of(q), sig));
          },
      },
      f.node().value);
}

// ---------------------------------------------------------------------------
// Classification

std::size_t type_order(const Type& type) {
  return std::visit(overloaded{
                        [](const Type::Base&) -> std::size_t { return 1; },
                        [](const Type::Var&) -> std::size_t { return 1; },
                        [](const Type::Arrow& a) { return std::max(type_order(a.domain) + 1, type_order(a.codomain)); },
                        [](const Type::Forall& f) { return type_order(f.body); },
                        // A finite set of T behaves like a predicate over T.
                        [](const Type::Set& s) { return type_order(s.element) + 1; },
                    },
                    type.node().value);
}

namespace {

struct Profiler {
  std::size_t order = 1;
  std::set<std::string> sorts;

  void binder(const Type& t) {
    order = std::max(order, type_order(t));
    collect_sorts(t, sorts);
  }

  void visit(const Formula& f) {
    std::visit(overloaded{
                   [&](const Formula::Atom& a) {
                     collect_sorts(a.head_type, sorts);
                     for (const auto& t : a.type_args) collect_sorts(t, sorts);
                     for (const auto& x : a.args) visit(x);
                   },
                   [&](const Formula::Conn& c) {
                     for (const auto& x : c.args) visit(x);
                   },
                   [&](const Formula::Quant& q) {
                     binder(q.sort);
                     visit(body_of(q));
                   },
               },
               f.node().value);
  }

  void visit(const HolTerm& t) {
    std::visit(overloaded{
                   [&](const HolTerm::Var& v) {
                     collect_sorts(v.type, sorts);
                     for (const auto& x : v.args) visit(x);
                   },
                   [&](const HolTerm::ConstApp& c) {
                     collect_sorts(c.type, sorts);
                     for (const auto& ty : c.type_args) collect_sorts(ty, sorts);
                     for (const auto& x : c.args) visit(x);
                   },
                   [&](const HolTerm::Hilbert& h) {
                     binder(h.sort);
                     visit(body_of(h));
                   },
                   [&](const HolTerm::Abs& a) {
                     collect_sorts(a.type, sorts);
                     visit(body_of(a));
                   },
                   [&](const HolTerm::Prop& p) { visit(body_of(p)); },
               },
               t.node().value);
  }
};

}  // namespace

LogicProfile classify(const Formula& formula) {
  Profiler p;
  p.visit(formula);
  return LogicProfile{p.order, p.sorts.size()};
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string unicode_type(const Type& type, bool nested = false) {
  return std::visit(overloaded{
                        [](const Type::Base& b) { return b.sort.is_prop() ? std::string("t") : b.sort.name; },
                        [](const Type::Var& v) { return v.name; },
                        [&](const Type::Arrow& a) {
                          std::string s = unicode_type(a.domain, true) + "→" + unicode_type(a.codomain);
                          return nested ? "(" + s + ")" : s;
                        },
                        [&](const Type::Forall& f) {
                          std::string s = "∀" + f.binder + ". " + unicode_type(f.body);
                          return nested ? "(" + s + ")" : s;
                        },
                        [](const Type::Set& s) { return "set(" + unicode_type(s.element) + ")"; },
                    },
                    type.node().value);
}

std::string binder_sort(const Type& t) {
  std::string s = unicode_type(t);
  return t.get<Type::Base>() || t.get<Type::Var>() ? s : "(" + s + ")";
}

struct Printer {
  Style style;

  std::string application(const std::string& head, const std::vector<Type>& type_args, const std::vector<HolTerm>& args) {
    if (type_args.empty() && args.empty()) return head;
    if (style == Style::SExpr) {
      std::string out = "(" + head;
      for (const auto& t : type_args) out += " (type " + print_type(t) + ")";
      for (const auto& a : args) out += " " + term(a);
      return out + ")";
    }
    std::string out = head;
    if (!type_args.empty()) {
      out += "[";
      for (std::size_t i = 0; i < type_args.size(); ++i) out += (i ? ", " : "") + unicode_type(type_args[i]);
      out += "]";
    }
    if (!args.empty()) {
      out += "(";
      for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + term(args[i]);
      out += ")";
    }
    return out;
  }

  std::string binder(const char* keyword, const char* symbol, const std::string& var, const Type& sort,
                     const std::string& body) {
    if (style == Style::SExpr) return std::string("(") + keyword + " (" + var + " " + print_type(sort) + ") " + body + ")";
    return std::string(symbol) + var + ":" + binder_sort(sort) + ". " + body;
  }

  // Unicode operands of connectives get parentheses unless atomic or negated.
  std::string operand(const Formula& f) {
    std::string s = formula(f);
    if (style == Style::SExpr || f.get<Formula::Atom>()) return s;
    if (const auto* c = f.get<Formula::Conn>(); c && c->op == Formula::Conn::Op::Not) return s;
    return "(" + s + ")";
  }

  std::string formula(const Formula& f) {
    return std::visit(
        overloaded{
            [&](const Formula::Atom& a) { return application(a.head, a.type_args, a.args); },
            [&](const Formula::Conn& c) {
              switch (c.op) {
                case Formula::Conn::Op::And:
                  return style == Style::SExpr ? "(and " + formula(c.args[0]) + " " + formula(c.args[1]) + ")"
                                               : operand(c.args[0]) + " ∧ " + operand(c.args[1]);
                case Formula::Conn::Op::Implies:
                  return style == Style::SExpr ? "(implies " + formula(c.args[0]) + " " + formula(c.args[1]) + ")"
                                               : operand(c.args[0]) + " ⊃ " + operand(c.args[1]);
                case Formula::Conn::Op::Not:
                  return style == Style::SExpr ? "(not " + formula(c.args[0]) + ")" : "¬" + operand(c.args[0]);
              }
              return std::string();
            },
            [&](const Formula::Quant& q) {
              bool all = q.kind == Formula::Quant::Kind::Forall;
              return binder(all ? "forall" : "exists", all ? "∀" : "∃", q.var, q.sort, formula(body_of(q)));
            },
        },
        f.node().value);
  }

  std::string term(const HolTerm& t) {
    return std::visit(overloaded{
                          [&](const HolTerm::Var& v) { return application(v.name, {}, v.args); },
                          [&](const HolTerm::ConstApp& c) { return application(c.name, c.type_args, c.args); },
                          [&](const HolTerm::Hilbert& h) {
                            bool eps = h.kind == HolTerm::Hilbert::Kind::Epsilon;
                            return binder(eps ? "eps" : "tau", eps ? "ε" : "τ", h.var, h.sort, formula(body_of(h)));
                          },
                          [&](const HolTerm::Abs& a) {
                            return binder("lambda", "λ", a.var, a.type, term(body_of(a)));
                          },
                          [&](const HolTerm::Prop& p) { return formula(body_of(p)); },
                      },
                      t.node().value);
  }
};

}  // namespace

std::string print_formula(const Formula& formula, Style style) { return Printer{style}.formula(formula); }

// ---------------------------------------------------------------------------
// Reading

namespace {

struct FormulaReader {
  const Signature& sig;

  bool is_binder_form(const SExpr& e, const char* keyword) const {
    return e.is_form(keyword) && e.items.size() == 3 && e.items[1].is_list && e.items[1].items.size() == 2 &&
           e.items[1].items[0].is_atom();
  }

  std::pair<std::string, Type> binding(const SExpr& e) const {
    return {e.items[1].items[0].atom, parse_type(e.items[1].items[1], &sig)};
  }

  // Resolves a head name to (is_variable, type).
  std::pair<bool, Type> head(const Scope& scope, const SExpr& at) const {
    if (auto t = scope.lookup(at.atom)) return {true, *t};
    if (auto t = sig.lookup(at.atom)) return {false, *t};
    syntax_error(at, "unknown name '" + at.atom + "'");
  }

  std::pair<std::vector<Type>, std::vector<HolTerm>> arguments(const Scope& scope, Type cur, const SExpr& form) {
    std::vector<Type> type_args;
    std::vector<HolTerm> args;
    for (std::size_t i = 1; i < form.items.size(); ++i) {
      const SExpr& item = form.items[i];
      if (item.is_form("type") && item.items.size() == 2) {
        const auto* all = cur.get<Type::Forall>();
        if (!all) syntax_error(item, "type argument to a non-polymorphic head");
        Type t = parse_type(item.items[1], &sig);
        type_args.push_back(t);
        cur = substitute_type(all->body, all->binder, t);
        continue;
      }
      const auto* arrow = cur.get<Type::Arrow>();
      if (!arrow) syntax_error(item, "too many arguments");
      args.push_back(term(scope, item, arrow->domain));
      cur = arrow->codomain;
    }
    return {std::move(type_args), std::move(args)};
  }

  Formula formula(const Scope& scope, const SExpr& e) {
    if (e.is_atom()) {
      auto [is_var, type] = head(scope, e);
      return Formula::Atom{sig.resolve(e.atom), is_var, type, {}, {}};
    }
    if (e.items.empty() || !e.items[0].is_atom()) syntax_error(e, "expected a formula");
    if (e.is_form("and") || e.is_form("implies")) {
      if (e.items.size() != 3) syntax_error(e, "binary connective expects two operands");
      auto op = e.is_form("and") ? Formula::Conn::Op::And : Formula::Conn::Op::Implies;
      return Formula::Conn{op, {formula(scope, e.items[1]), formula(scope, e.items[2])}};
    }
    if (e.is_form("not")) {
      if (e.items.size() != 2) syntax_error(e, "'not' expects one operand");
      return Formula::Conn{Formula::Conn::Op::Not, {formula(scope, e.items[1])}};
    }
    for (const char* kw : {"forall", "exists"}) {
      if (!e.is_form(kw)) continue;
      if (!is_binder_form(e, kw)) syntax_error(e, std::string("expected (") + kw + " (x TYPE) F)");
      auto [var, sort] = binding(e);
      Formula body = formula(scope.with_var(var, sort), e.items[2]);
      auto kind = std::string(kw) == "forall" ? Formula::Quant::Kind::Forall : Formula::Quant::Kind::Exists;
      return Formula::Quant{kind, var, sort, std::make_shared<const FormulaNode>(body.node())};
    }
    auto [is_var, type] = head(scope, e.items[0]);
    auto [type_args, args] = arguments(scope, type, e);
    std::string name = is_var ? e.items[0].atom : sig.resolve(e.items[0].atom);
    return Formula::Atom{name, is_var, type, std::move(type_args), std::move(args)};
  }

  HolTerm term(const Scope& scope, const SExpr& e, const Type& expected) {
    if (expected.is_prop()) return HolTerm::Prop{std::make_shared<const FormulaNode>(formula(scope, e).node())};
    if (e.is_atom()) {
      auto [is_var, type] = head(scope, e);
      if (is_var) return HolTerm::Var{e.atom, type, {}};
      return HolTerm::ConstApp{sig.resolve(e.atom), type, {}, {}};
    }
    if (e.items.empty() || !e.items[0].is_atom()) syntax_error(e, "expected a term");
    for (const char* kw : {"eps", "tau"}) {
      if (!e.is_form(kw)) continue;
      if (!is_binder_form(e, kw)) syntax_error(e, std::string("expected (") + kw + " (x TYPE) F)");
      auto [var, sort] = binding(e);
      Formula body = formula(scope.with_var(var, sort), e.items[2]);
      auto kind = std::string(kw) == "eps" ? HolTerm::Hilbert::Kind::Epsilon : HolTerm::Hilbert::Kind::Tau;
      return HolTerm::Hilbert{kind, var, sort, std::make_shared<const FormulaNode>(body.node())};
    }
    if (e.is_form("lambda")) {
      if (!is_binder_form(e, "lambda")) syntax_error(e, "expected (lambda (x TYPE) BODY)");
      const auto* arrow = expected.get<Type::Arrow>();
      if (!arrow) syntax_error(e, "abstraction where a " + print_type(expected) + " was expected");
      auto [var, type] = binding(e);
      HolTerm body = term(scope.with_var(var, type), e.items[2], arrow->codomain);
      return HolTerm::Abs{var, type, std::make_shared<const HolTermNode>(body.node())};
    }
    auto [is_var, type] = head(scope, e.items[0]);
    auto [type_args, args] = arguments(scope, type, e);
    if (is_var) {
      if (!type_args.empty()) syntax_error(e, "type arguments on a variable");
      return HolTerm::Var{e.items[0].atom, type, std::move(args)};
    }
    return HolTerm::ConstApp{sig.resolve(e.items[0].atom), type, std::move(type_args), std::move(args)};
  }
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  return FormulaReader{sig}.formula(TypingContext{}, read_sexpr(text));
}

}  // namespace glue::hol
