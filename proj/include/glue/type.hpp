#ifndef GLUE_TYPE_HPP
#define GLUE_TYPE_HPP

#include <memory>
#include <set>
#include <string>
#include <variant>

namespace glue {

/// A base sort: the single proposition sort `t` or a named entity sort `e:NAME`.
struct Sort {
  enum class Kind { Prop, Entity };

  Kind kind = Kind::Prop;
  std::string name;  // empty for Prop

  static Sort prop() { return {}; }
  static Sort entity(std::string name) { return {Kind::Entity, std::move(name)}; }

  bool is_prop() const { return kind == Kind::Prop; }
  friend bool operator==(const Sort&, const Sort&) = default;
  friend auto operator<=>(const Sort&, const Sort&) = default;
};

struct TypeNode;

/// Immutable System F type. Cheap to copy (shared structure).
///
/// Equality through `==` is structural on names; use alpha_eq() for the
/// binder-insensitive equality every consumer of types should rely on.
class Type {
 public:
  struct Base;
  struct Var;
  struct Arrow;
  struct Forall;
  struct Set;

  static Type base(Sort sort);
  static Type prop() { return base(Sort::prop()); }
  static Type entity(std::string name) { return base(Sort::entity(std::move(name))); }
  static Type var(std::string name);
  static Type arrow(Type domain, Type codomain);
  static Type forall(std::string binder, Type body);
  static Type set_of(Type element);

  template <class T>
  bool is() const;
  template <class T>
  const T& as() const;
  template <class T>
  const T* get() const;

  const TypeNode& node() const { return *node_; }
  bool same_node(const Type& other) const { return node_ == other.node_; }

  bool is_prop() const;

 private:
  explicit Type(std::shared_ptr<const TypeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TypeNode> node_;
};

struct Type::Base {
  Sort sort;
};
struct Type::Var {
  std::string name;
};
struct Type::Arrow {
  Type domain;
  Type codomain;
};
struct Type::Forall {
  std::string binder;
  Type body;
};
/// Finite sets of elements; only available when the finset extension is on.
struct Type::Set {
  Type element;
};

struct TypeNode {
  std::variant<Type::Base, Type::Var, Type::Arrow, Type::Forall, Type::Set> value;
};

template <class T>
bool Type::is() const {
  return std::holds_alternative<T>(node_->value);
}
template <class T>
const T& Type::as() const {
  return std::get<T>(node_->value);
}
template <class T>
const T* Type::get() const {
  return std::get_if<T>(&node_->value);
}

/// Builds `a1 -> a2 -> ... -> result` (right nested).
Type arrows(std::initializer_list<Type> domains, Type result);

std::set<std::string> free_type_vars(const Type& type);
bool alpha_eq(const Type& a, const Type& b);

/// Capture-avoiding substitution of `replacement` for the free type variable `name`.
Type substitute_type(const Type& type, const std::string& name, const Type& replacement);

/// Entity sorts mentioned anywhere in the type.
void collect_sorts(const Type& type, std::set<std::string>& out);

std::string print_type(const Type& type);

/// Returns `base` if admissible, otherwise `base` followed by primes until `taken`
/// reports false.
template <class Taken>
std::string fresh_name(const std::string& base, Taken&& taken) {
  std::string candidate = base;
  while (taken(candidate)) candidate += '\'';
  return candidate;
}

}  // namespace glue

#endif  // GLUE_TYPE_HPP
