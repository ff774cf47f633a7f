#include "glue/type.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "glue/overloaded.hpp"

namespace glue {

namespace {

void collect_free(const Type& type, std::vector<std::string>& bound, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Type::Base&) {},
                 [&](const Type::Var& v) {
                   for (const auto& b : bound)
                     if (b == v.name) return;
                   out.insert(v.name);
                 },
                 [&](const Type::Arrow& a) {
                   collect_free(a.domain, bound, out);
                   collect_free(a.codomain, bound, out);
                 },
                 [&](const Type::Forall& f) {
                   bound.push_back(f.binder);
                   collect_free(f.body, bound, out);
                   bound.pop_back();
                 },
                 [&](const Type::Set& s) { collect_free(s.element, bound, out); },
             },
             type.node().value);
}

// Binder stacks pair up the names bound on each side at equal depths.
using BinderStack = std::vector<std::pair<std::string, std::string>>;

bool alpha_eq_impl(const Type& a, const Type& b, BinderStack& stack) {
  if (a.same_node(b) && stack.empty()) return true;
  if (a.node().value.index() != b.node().value.index()) return false;
  return std::visit(
      overloaded{
          [&](const Type::Base& x) { return x.sort == b.as<Type::Base>().sort; },
          [&](const Type::Var& x) {
            const auto& y = b.as<Type::Var>();
            for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
              bool left = it->first == x.name;
              bool right = it->second == y.name;
              if (left || right) return left && right;
            }
            return x.name == y.name;
          },
          [&](const Type::Arrow& x) {
            const auto& y = b.as<Type::Arrow>();
            return alpha_eq_impl(x.domain, y.domain, stack) &&
                   alpha_eq_impl(x.codomain, y.codomain, stack);
          },
          [&](const Type::Forall& x) {
            const auto& y = b.as<Type::Forall>();
            stack.emplace_back(x.binder, y.binder);
            bool eq = alpha_eq_impl(x.body, y.body, stack);
            stack.pop_back();
            return eq;
          },
          [&](const Type::Set& x) { return alpha_eq_impl(x.element, b.as<Type::Set>().element, stack); },
      },
      a.node().value);
}

void print_impl(const Type& type, std::ostream& os) {
  std::visit(overloaded{
                 [&](const Type::Base& b) {
                   if (b.sort.is_prop())
                     os << 't';
                   else
                     os << "e:" << b.sort.name;
                 },
                 [&](const Type::Var& v) { os << v.name; },
                 [&](const Type::Arrow& a) {
                   os << "(-> ";
                   print_impl(a.domain, os);
                   os << ' ';
                   print_impl(a.codomain, os);
                   os << ')';
                 },
                 [&](const Type::Forall& f) {
                   os << "(all " << f.binder << ' ';
                   print_impl(f.body, os);
                   os << ')';
                 },
                 [&](const Type::Set& s) {
                   os << "(set ";
                   print_impl(s.element, os);
                   os << ')';
                 },
             },
             type.node().value);
}

}  // namespace

Type Type::base(Sort sort) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Base{std::move(sort)}}));
}
Type Type::var(std::string name) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Var{std::move(name)}}));
}
Type Type::arrow(Type domain, Type codomain) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Arrow{std::move(domain), std::move(codomain)}}));
}
Type Type::forall(std::string binder, Type body) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Forall{std::move(binder), std::move(body)}}));
}
Type Type::set_of(Type element) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Set{std::move(element)}}));
}

bool Type::is_prop() const {
  const auto* b = get<Base>();
  return b != nullptr && b->sort.is_prop();
}

Type arrows(std::initializer_list<Type> domains, Type result) {
  std::vector<Type> ds(domains);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) result = Type::arrow(*it, result);
  return result;
}

std::set<std::string> free_type_vars(const Type& type) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(type, bound, out);
  return out;
}

bool alpha_eq(const Type& a, const Type& b) {
  BinderStack stack;
  return alpha_eq_impl(a, b, stack);
}

Type substitute_type(const Type& type, const std::string& name, const Type& replacement) {
  // Computed once; renaming decisions below only need the replacement's free variables.
  const auto replacement_free = free_type_vars(replacement);
  struct Walker {
    const std::string& name;
    const Type& replacement;
    const std::set<std::string>& replacement_free;

    Type operator()(const Type& t) const {
      return std::visit(
          overloaded{
              [&](const Type::Base&) { return t; },
              [&](const Type::Var& v) { return v.name == name ? replacement : t; },
              [&](const Type::Arrow& a) {
                return Type::arrow((*this)(a.domain), (*this)(a.codomain));
              },
              [&](const Type::Forall& f) {
                if (f.binder == name) return t;
                auto body_free = free_type_vars(f.body);
                if (!body_free.contains(name)) return t;
                if (!replacement_free.contains(f.binder))
                  return Type::forall(f.binder, (*this)(f.body));
                auto renamed = fresh_name(f.binder, [&](const std::string& c) {
                  return replacement_free.contains(c) || body_free.contains(c) || c == name;
                });
                auto body = substitute_type(f.body, f.binder, Type::var(renamed));
                return Type::forall(renamed, (*this)(body));
              },
              [&](const Type::Set& s) { return Type::set_of((*this)(s.element)); },
          },
          t.node().value);
    }
  };
  return Walker{name, replacement, replacement_free}(type);
}

void collect_sorts(const Type& type, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Type::Base& b) {
                   if (!b.sort.is_prop()) out.insert(b.sort.name);
                 },
                 [&](const Type::Var&) {},
                 [&](const Type::Arrow& a) {
                   collect_sorts(a.domain, out);
                   collect_sorts(a.codomain, out);
                 },
                 [&](const Type::Forall& f) { collect_sorts(f.body, out); },
                 [&](const Type::Set& s) { collect_sorts(s.element, out); },
             },
             type.node().value);
}

std::string print_type(const Type& type) {
  std::ostringstream os;
  print_impl(type, os);
  return os.str();
}

}  // namespace glue
