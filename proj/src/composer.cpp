#include "glue/composer.hpp"

#include <algorithm>
#include <set>

#include "glue/coercion.hpp"
#include "glue/kernel.hpp"
#include "glue/overloaded.hpp"
#include "glue/parse.hpp"

namespace glue {

// ---------------------------------------------------------------------------
// Parse trees

ParseTree ParseTree::leaf(std::string word) {
  return ParseTree(std::make_shared<const ParseTreeNode>(ParseTreeNode{Leaf{std::move(word)}}));
}
ParseTree ParseTree::node(ParseTree fn, ParseTree arg) {
  return ParseTree(std::make_shared<const ParseTreeNode>(ParseTreeNode{Node{std::move(fn), std::move(arg)}}));
}
ParseTree ParseTree::annotate(ParseTree sub, std::vector<Type> type_args) {
  return ParseTree(
      std::make_shared<const ParseTreeNode>(ParseTreeNode{TyAnno{std::move(sub), std::move(type_args)}}));
}

ParseTree parse_tree(const SExpr& e, const Signature& sig) {
  if (e.is_form("LEAF")) {
    if (e.items.size() != 2 || !e.items[1].is_atom()) syntax_error(e, "expected (LEAF word)");
    return ParseTree::leaf(e.items[1].atom);
  }
  if (e.is_form("NODE")) {
    if (e.items.size() != 3) syntax_error(e, "expected (NODE fnTree argTree)");
    return ParseTree::node(parse_tree(e.items[1], sig), parse_tree(e.items[2], sig));
  }
  if (e.is_form("TY")) {
    if (e.items.size() < 3) syntax_error(e, "expected (TY tree TYPE...)");
    std::vector<Type> types;
    for (std::size_t i = 2; i < e.items.size(); ++i) types.push_back(parse_type(e.items[i], &sig));
    return ParseTree::annotate(parse_tree(e.items[1], sig), std::move(types));
  }
  syntax_error(e, "expected LEAF, NODE or TY");
}

std::vector<ParseTree> read_trees(std::string_view text, const Signature& sig) {
  std::vector<ParseTree> out;
  for (const auto& e : read_sexprs(text)) out.push_back(parse_tree(e, sig));
  return out;
}

std::string print_tree(const ParseTree& tree) {
  return std::visit(overloaded{
                        [](const ParseTree::Leaf& l) { return "(LEAF " + l.word + ")"; },
                        [](const ParseTree::Node& n) {
                          return "(NODE " + print_tree(n.fn) + " " + print_tree(n.arg) + ")";
                        },
                        [](const ParseTree::TyAnno& a) {
                          std::string out = "(TY " + print_tree(a.sub);
                          for (const auto& t : a.type_args) out += " " + print_type(t);
                          return out + ")";
                        },
                    },
                    tree.value().value);
}

std::vector<std::string> leaves(const ParseTree& tree) {
  std::vector<std::string> out;
  std::visit(overloaded{
                 [&](const ParseTree::Leaf& l) { out.push_back(l.word); },
                 [&](const ParseTree::Node& n) {
                   out = leaves(n.fn);
                   auto rest = leaves(n.arg);
                   out.insert(out.end(), rest.begin(), rest.end());
                 },
                 [&](const ParseTree::TyAnno& a) { out = leaves(a.sub); },
             },
             tree.value().value);
  return out;
}

// ---------------------------------------------------------------------------
// Rigidity

std::string Adaptation::describe() const {
  switch (kind) {
    case Kind::Main:
      return "MAIN";
    case Kind::Coercion:
      return "coercion:" + label;
    case Kind::Transfer:
      return label + (rigidity == Rigidity::Rigid ? " (rigid)" : " (flexible)");
  }
  return label;
}

RigidityCheck check_rigidity(const UsedAdaptations& used) {
  for (const auto& [occurrence, adaptations] : used) {
    bool has_rigid = std::any_of(adaptations.begin(), adaptations.end(),
                                 [](const Adaptation& a) { return a.rigidity == Rigidity::Rigid; });
    if (has_rigid && adaptations.size() > 1) return {occurrence};
  }
  return {};
}

std::string Diagnosis::describe() const {
  auto sort_or_type = [](const std::optional<Type>& t) -> std::string {
    if (!t) return "?";
    if (const auto* b = t->get<Type::Base>(); b && !b->sort.is_prop()) return b->sort.name;
    return print_type(*t);
  };
  switch (kind) {
    case Kind::None:
      return "";
    case Kind::NoPath:
      return "NoPath(" + sort_or_type(found) + ", " + sort_or_type(expected) + ") at " + position;
    case Kind::RigidityViolation:
      return "RigidityViolation(" + occurrence + ") at " + position;
    case Kind::NotAFunction:
      return "NotAFunction(" + sort_or_type(found) + ") at " + position;
  }
  return "";
}

// ---------------------------------------------------------------------------
// Application

namespace {

using Binders = std::vector<std::pair<std::string, std::string>>;

bool bound_in(const Binders& binders, const std::string& name, bool left) {
  return std::any_of(binders.begin(), binders.end(),
                     [&](const auto& p) { return (left ? p.first : p.second) == name; });
}

// First-order syntactic matching of `pattern` (with pattern variables `vars`)
// against the closed `target`.
bool match(const Type& pattern, const Type& target, const std::set<std::string>& vars,
           std::map<std::string, Type>& subst, Binders& binders) {
  if (const auto* pv = pattern.get<Type::Var>()) {
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      if (it->first == pv->name) {
        const auto* tv = target.get<Type::Var>();
        return tv != nullptr && tv->name == it->second;
      }
    }
    if (vars.contains(pv->name)) {
      for (const auto& name : free_type_vars(target))
        if (bound_in(binders, name, false)) return false;  // would escape its binder
      auto [it, inserted] = subst.emplace(pv->name, target);
      return inserted || alpha_eq(it->second, target);
    }
    const auto* tv = target.get<Type::Var>();
    return tv != nullptr && tv->name == pv->name && !bound_in(binders, tv->name, false);
  }
  if (pattern.node().value.index() != target.node().value.index()) return false;
  return std::visit(overloaded{
                        [&](const Type::Base& b) { return b.sort == target.as<Type::Base>().sort; },
                        [&](const Type::Var&) { return false; },
                        [&](const Type::Arrow& a) {
                          const auto& t = target.as<Type::Arrow>();
                          return match(a.domain, t.domain, vars, subst, binders) &&
                                 match(a.codomain, t.codomain, vars, subst, binders);
                        },
                        [&](const Type::Forall& f) {
                          const auto& t = target.as<Type::Forall>();
                          binders.emplace_back(f.binder, t.binder);
                          bool ok = match(f.body, t.body, vars, subst, binders);
                          binders.pop_back();
                          return ok;
                        },
                        [&](const Type::Set& s) {
                          return match(s.element, target.as<Type::Set>().element, vars, subst, binders);
                        },
                    },
                    pattern.node().value);
}

struct Instantiated {
  Term term;                           // fn applied to its type arguments
  Type domain;
  Type codomain;
  std::vector<std::string> reabstract; // binders left undetermined by matching
};

enum class InstFailure { None, NotAFunction, NoMatch };

// Strips fn's leading ∀s: binders fixed by matching the domain against `arg`
// are instantiated, the rest become fresh type variables to re-abstract.
std::optional<Instantiated> instantiate(const Term& fn, const Type& fn_type, const Type& arg, InstFailure& failure,
                                        Type& domain_out) {
  std::vector<std::string> binders;
  std::set<std::string> used_names;
  Type body = fn_type;
  while (const auto* all = body.get<Type::Forall>()) {
    auto body_free = free_type_vars(all->body);
    std::string name = fresh_name(all->binder, [&](const std::string& c) {
      return used_names.contains(c) || (c != all->binder && body_free.contains(c));
    });
    Type next = name == all->binder ? all->body : substitute_type(all->body, all->binder, Type::var(name));
    binders.push_back(name);
    used_names.insert(name);
    body = next;
  }
  const auto* arrow = body.get<Type::Arrow>();
  if (arrow == nullptr) {
    failure = InstFailure::NotAFunction;
    return std::nullopt;
  }
  domain_out = arrow->domain;
  std::map<std::string, Type> subst;
  if (!binders.empty()) {
    std::set<std::string> vars(binders.begin(), binders.end());
    Binders stack;
    if (!match(arrow->domain, arg, vars, subst, stack)) {
      failure = InstFailure::NoMatch;
      return std::nullopt;
    }
  }
  Instantiated out{fn, arrow->domain, arrow->codomain, {}};
  for (const auto& b : binders) {
    auto it = subst.find(b);
    Type t = it != subst.end() ? it->second : Type::var(b);
    if (it == subst.end()) out.reabstract.push_back(b);
    out.term = Term::ty_app(out.term, t);
  }
  // Simultaneous substitution is safe: matched types are closed and the
  // remaining binders map to themselves.
  for (const auto& [name, type] : subst) {
    out.domain = substitute_type(out.domain, name, type);
    out.codomain = substitute_type(out.codomain, name, type);
  }
  return out;
}

struct NodeFailure {
  Diagnosis::Kind kind = Diagnosis::Kind::None;
  std::optional<Type> expected;
  std::optional<Type> found;
};

struct NodeOutcome {
  std::vector<NodeApplication> applications;
  NodeFailure failure;
};

void add_use(UsedAdaptations& used, const std::optional<std::pair<std::size_t, std::string>>& occ, Adaptation a) {
  if (occ) used[occ->first].push_back(std::move(a));
}

std::vector<const TransferTerm*> transfers_of(const Lexicon& lex, const Operand& op, Rigidity rigidity) {
  std::vector<const TransferTerm*> out;
  if (!op.occurrence) return out;
  for (const auto& t : lex.entry(op.occurrence->second).transfers)
    if (t.rigidity == rigidity) out.push_back(&t);
  return out;
}

std::string coercion_label(const Term& c) {
  if (const auto* k = c.get<Term::Const>()) return k->name;
  return print_term(c);
}

struct SlotFiller {
  Term term;
  Adaptation adaptation;
};

// Fills consecutive slots of type (A→Y) that follow an argument of type A.
// Returns false when some slot has no filler.
bool fill_slots(const Lexicon& lex, const Operand& arg, NodeApplication base, std::vector<NodeApplication>& out,
                NodeFailure& failure) {
  std::vector<std::vector<SlotFiller>> slots;
  Type rest = base.type;
  while (const auto* outer = rest.get<Type::Arrow>()) {
    const auto* slot = outer->domain.get<Type::Arrow>();
    if (slot == nullptr || !alpha_eq(slot->domain, arg.type)) break;
    if (!free_type_vars(outer->domain).empty()) break;
    std::vector<SlotFiller> fillers;
    if (alpha_eq(slot->domain, slot->codomain)) {
      fillers.push_back({Term::lam("x", slot->domain, Term::var("x")), Adaptation::main()});
    } else if (auto c = find_coercion(lex.coercions, lex.signature, slot->domain, slot->codomain)) {
      fillers.push_back({*c, Adaptation::coercion(coercion_label(*c))});
    }
    for (Rigidity r : {Rigidity::Flexible, Rigidity::Rigid})
      for (const auto* t : transfers_of(lex, arg, r))
        if (alpha_eq(t->type, outer->domain)) fillers.push_back({t->term, Adaptation::transfer(*t)});
    if (fillers.empty()) {
      failure = {Diagnosis::Kind::NoPath, slot->codomain, slot->domain};
      return false;
    }
    slots.push_back(std::move(fillers));
    rest = outer->codomain;
  }
  if (slots.empty()) {
    add_use(base.used, arg.occurrence, Adaptation::main());
    out.push_back(std::move(base));
    return true;
  }
  // Cartesian product, first slot varying slowest.
  std::vector<std::size_t> pick(slots.size(), 0);
  while (true) {
    NodeApplication app = base;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const auto& f = slots[i][pick[i]];
      app.term = Term::app(app.term, f.term);
      app.type = app.type.as<Type::Arrow>().codomain;
      app.inserted.push_back(f.term);
      add_use(app.used, arg.occurrence, f.adaptation);
    }
    out.push_back(std::move(app));
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++pick[i] < slots[i].size()) break;
      pick[i] = 0;
      if (i == 0) return true;
    }
  }
}

Term reabstract(Term term, const std::vector<std::string>& names) {
  for (auto it = names.rbegin(); it != names.rend(); ++it) term = Term::ty_lam(*it, term);
  return term;
}

Type reabstract(Type type, const std::vector<std::string>& names) {
  for (auto it = names.rbegin(); it != names.rend(); ++it) type = Type::forall(*it, type);
  return type;
}

NodeOutcome apply_node_impl(const Operand& fn, const Operand& arg, const Lexicon& lex) {
  NodeOutcome outcome;
  auto& out = outcome.applications;
  InstFailure inst_failure = InstFailure::None;
  Type domain = arg.type;
  auto inst = instantiate(fn.term, fn.type, arg.type, inst_failure, domain);

  auto fn_used = [&] {
    UsedAdaptations used;
    add_use(used, fn.occurrence, Adaptation::main());
    return used;
  };

  if (inst) {
    // Exact application, then transfer slots.
    if (alpha_eq(inst->domain, arg.type)) {
      NodeApplication base{Term::app(inst->term, arg.term), inst->codomain, fn_used(), {}};
      if (!inst->reabstract.empty()) {
        base.term = reabstract(base.term, inst->reabstract);
        base.type = reabstract(base.type, inst->reabstract);
        add_use(base.used, arg.occurrence, Adaptation::main());
        out.push_back(std::move(base));
      } else {
        fill_slots(lex, arg, std::move(base), out, outcome.failure);
      }
    } else if (free_type_vars(inst->domain).empty()) {
      if (auto c = find_coercion(lex.coercions, lex.signature, arg.type, inst->domain)) {
        NodeApplication app{Term::app(inst->term, Term::app(*c, arg.term)), inst->codomain, fn_used(), {*c}};
        add_use(app.used, arg.occurrence, Adaptation::coercion(coercion_label(*c)));
        app.term = reabstract(app.term, inst->reabstract);
        app.type = reabstract(app.type, inst->reabstract);
        out.push_back(std::move(app));
      }
    }
  }

  for (Rigidity r : {Rigidity::Flexible, Rigidity::Rigid}) {
    if (inst && free_type_vars(inst->domain).empty()) {
      for (const auto* t : transfers_of(lex, arg, r)) {
        if (!alpha_eq(t->type, Type::arrow(arg.type, inst->domain))) continue;
        NodeApplication app{Term::app(inst->term, Term::app(t->term, arg.term)), inst->codomain, fn_used(), {t->term}};
        add_use(app.used, arg.occurrence, Adaptation::transfer(*t));
        app.term = reabstract(app.term, inst->reabstract);
        app.type = reabstract(app.type, inst->reabstract);
        out.push_back(std::move(app));
      }
    }
    for (const auto* t : transfers_of(lex, fn, r)) {
      const auto* lifted = t->type.get<Type::Arrow>();
      if (lifted == nullptr || !alpha_eq(lifted->domain, fn.type)) continue;
      const auto* adapted = lifted->codomain.get<Type::Arrow>();
      if (adapted == nullptr || !alpha_eq(adapted->domain, arg.type)) continue;
      NodeApplication app{Term::app(Term::app(t->term, fn.term), arg.term), adapted->codomain, {}, {t->term}};
      add_use(app.used, fn.occurrence, Adaptation::transfer(*t));
      add_use(app.used, arg.occurrence, Adaptation::main());
      out.push_back(std::move(app));
    }
  }

  if (out.empty() && outcome.failure.kind == Diagnosis::Kind::None) {
    if (inst_failure == InstFailure::NotAFunction)
      outcome.failure = {Diagnosis::Kind::NotAFunction, std::nullopt, fn.type};
    else
      outcome.failure = {Diagnosis::Kind::NoPath, inst ? inst->domain : domain, arg.type};
  }
  return outcome;
}

// ---------------------------------------------------------------------------
// Tree walk

struct Partial {
  Term term;
  Type type;
  UsedAdaptations used;
  std::vector<InsertedCoercion> inserted;
  std::optional<std::pair<std::size_t, std::string>> occurrence;
};

struct SubResult {
  std::vector<Partial> partials;
  Diagnosis failure;
};

struct Walker {
  const Lexicon& lex;
  std::size_t next_leaf = 0;

  SubResult walk(const ParseTree& tree, const std::string& position, std::size_t depth) {
    return std::visit(overloaded{
                          [&](const ParseTree::Leaf& l) { return leaf(l); },
                          [&](const ParseTree::Node& n) { return node(n, position, depth); },
                          [&](const ParseTree::TyAnno& a) { return annotated(a, position, depth); },
                      },
                      tree.value().value);
  }

  SubResult leaf(const ParseTree::Leaf& l) {
    const LexEntry& entry = lex.entry(l.word);
    SubResult r;
    r.partials.push_back(Partial{entry.main, entry.main_type, {}, {}, std::make_pair(next_leaf++, l.word)});
    return r;
  }

  SubResult annotated(const ParseTree::TyAnno& a, const std::string& position, std::size_t depth) {
    SubResult sub = walk(a.sub, position, depth);
    SubResult r;
    for (auto p : sub.partials) {
      bool ok = true;
      for (const auto& t : a.type_args) {
        const auto* all = p.type.get<Type::Forall>();
        if (all == nullptr) {
          if (r.failure.empty()) r.failure = {Diagnosis::Kind::NotAFunction, position, std::nullopt, p.type, "", depth};
          ok = false;
          break;
        }
        p.term = Term::ty_app(p.term, t);
        p.type = substitute_type(all->body, all->binder, t);
      }
      if (ok) r.partials.push_back(std::move(p));
    }
    if (sub.partials.empty()) r.failure = sub.failure;
    return r;
  }

  SubResult node(const ParseTree::Node& n, const std::string& position, std::size_t depth) {
    SubResult fn = walk(n.fn, position + ".fn", depth + 1);
    SubResult arg = walk(n.arg, position + ".arg", depth + 1);
    SubResult r;
    if (fn.partials.empty() || arg.partials.empty()) {
      if (fn.partials.empty() && arg.partials.empty())
        r.failure = fn.failure.depth >= arg.failure.depth ? fn.failure : arg.failure;
      else
        r.failure = fn.partials.empty() ? fn.failure : arg.failure;
      return r;
    }
    Diagnosis first_failure;
    Diagnosis rigidity_failure;
    for (const auto& f : fn.partials) {
      for (const auto& a : arg.partials) {
        auto outcome = apply_node_impl(Operand{f.term, f.type, f.occurrence}, Operand{a.term, a.type, a.occurrence}, lex);
        if (outcome.applications.empty() && first_failure.empty())
          first_failure = {outcome.failure.kind, position, outcome.failure.expected, outcome.failure.found, "", depth};
        for (auto& app : outcome.applications) {
          Partial p{app.term, app.type, f.used, f.inserted, std::nullopt};
          for (const auto& [occ, uses] : a.used) {
            auto& dst = p.used[occ];
            dst.insert(dst.end(), uses.begin(), uses.end());
          }
          for (const auto& [occ, uses] : app.used) {
            auto& dst = p.used[occ];
            dst.insert(dst.end(), uses.begin(), uses.end());
          }
          p.inserted.insert(p.inserted.end(), a.inserted.begin(), a.inserted.end());
          for (std::size_t i = 0; i < app.inserted.size(); ++i)
            p.inserted.push_back({position + ":" + std::to_string(i + 1), app.inserted[i]});
          auto rigid = check_rigidity(p.used);
          if (!rigid.ok()) {
            if (rigidity_failure.empty())
              rigidity_failure = {Diagnosis::Kind::RigidityViolation, position, std::nullopt, std::nullopt,
                                  occurrence_word(*rigid.violating_occurrence, f, a), depth};
            continue;
          }
          r.partials.push_back(std::move(p));
        }
      }
    }
    if (r.partials.empty()) r.failure = !rigidity_failure.empty() ? rigidity_failure : first_failure;
    return r;
  }

  std::string occurrence_word(std::size_t occ, const Partial& f, const Partial& a) const {
    for (const auto* p : {&f, &a})
      if (p->occurrence && p->occurrence->first == occ) return p->occurrence->second;
    return words.size() > occ ? words[occ] : std::to_string(occ);
  }

  std::vector<std::string> words;
};

}  // namespace

std::vector<NodeApplication> apply_node(const Operand& fn, const Operand& arg, const Lexicon& lex) {
  return apply_node_impl(fn, arg, lex).applications;
}

Composition compose_with_diagnosis(const ParseTree& tree, const Lexicon& lex, std::size_t limit) {
  Walker walker{lex, 0, leaves(tree)};
  SubResult result = walker.walk(tree, "root", 0);
  Composition out;
  for (auto& p : result.partials) {
    if (out.analyses.size() >= limit) break;
    if (p.occurrence) p.used[p.occurrence->first].push_back(Adaptation::main());
    bool duplicate = std::any_of(out.analyses.begin(), out.analyses.end(),
                                 [&](const Analysis& a) { return alpha_eq(a.term, p.term); });
    if (duplicate) continue;
    out.analyses.push_back(Analysis{p.term, p.type, walker.words, std::move(p.used), std::move(p.inserted)});
  }
  if (out.analyses.empty()) out.diagnosis = result.failure;
  return out;
}

std::vector<Analysis> compose(const ParseTree& tree, const Lexicon& lex, std::size_t limit) {
  return compose_with_diagnosis(tree, lex, limit).analyses;
}

Diagnosis diagnose(const ParseTree& tree, const Lexicon& lex) {
  return compose_with_diagnosis(tree, lex, 1).diagnosis;
}

}  // namespace glue
