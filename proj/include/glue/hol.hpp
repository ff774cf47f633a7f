#ifndef GLUE_HOL_HPP
#define GLUE_HOL_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glue/error.hpp"
#include "glue/kernel.hpp"
#include "glue/signature.hpp"
#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue::hol {

struct FormulaNode;
struct HolTermNode;

class Formula;

/// A term of many-sorted higher-order logic (anything whose type is not t).
class HolTerm {
 public:
  /// A variable, possibly applied: `f x y`.
  struct Var {
    std::string name;
    Type type;
    std::vector<HolTerm> args;
  };
  /// A signature constant with its type and term arguments: `g0 b`, `Succ n`.
  struct ConstApp {
    std::string name;
    Type type;
    std::vector<Type> type_args;
    std::vector<HolTerm> args;
  };
  /// εx:T. F or τx:T. F
  struct Hilbert {
    enum class Kind { Epsilon, Tau };
    Kind kind;
    std::string var;
    Type sort;
    std::shared_ptr<const FormulaNode> body;
  };
  /// λx:T. body, for functional arguments.
  struct Abs {
    std::string var;
    Type type;
    std::shared_ptr<const HolTermNode> body;
  };
  /// A formula in argument position (an argument of type t).
  struct Prop {
    std::shared_ptr<const FormulaNode> formula;
  };

  HolTerm(Var v);
  HolTerm(ConstApp c);
  HolTerm(Hilbert h);
  HolTerm(Abs a);
  HolTerm(Prop p);
  explicit HolTerm(std::shared_ptr<const HolTermNode> node) : node_(std::move(node)) {}

  template <class T>
  const T* get() const;
  const HolTermNode& node() const { return *node_; }

 private:
  std::shared_ptr<const HolTermNode> node_;
};

class Formula {
 public:
  /// `head args...` of type t. The head is a predicate constant or a bound
  /// predicate variable.
  struct Atom {
    std::string head;
    bool head_is_variable = false;
    Type head_type;
    std::vector<Type> type_args;
    std::vector<HolTerm> args;
  };
  struct Conn {
    enum class Op { And, Not, Implies };
    Op op;
    std::vector<Formula> args;
  };
  struct Quant {
    enum class Kind { Forall, Exists };
    Kind kind;
    std::string var;
    Type sort;
    std::shared_ptr<const FormulaNode> body;
  };

  Formula(Atom a);
  Formula(Conn c);
  Formula(Quant q);
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  template <class T>
  const T* get() const;
  const FormulaNode& node() const { return *node_; }

 private:
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  std::variant<Formula::Atom, Formula::Conn, Formula::Quant> value;
};

struct HolTermNode {
  std::variant<HolTerm::Var, HolTerm::ConstApp, HolTerm::Hilbert, HolTerm::Abs, HolTerm::Prop> value;
};

template <class T>
const T* HolTerm::get() const {
  return std::get_if<T>(&node_->value);
}
template <class T>
const T* Formula::get() const {
  return std::get_if<T>(&node_->value);
}

inline Formula body_of(const Formula::Quant& q) { return Formula(q.body); }
inline Formula body_of(const HolTerm::Hilbert& h) { return Formula(h.body); }
inline Formula body_of(const HolTerm::Prop& p) { return Formula(p.formula); }
inline HolTerm body_of(const HolTerm::Abs& a) { return HolTerm(a.body); }

class ExtractionError : public Error {
 public:
  enum class Kind { NotNormal, NotPropType, UnexpectedHead };
  ExtractionError(Kind kind, const std::string& detail);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(ExtractionError::Kind kind);

/// Reads a closed, β-normal, η-long term of type t as a formula.
Formula extract_formula(const NormalForm& normal, const Signature& sig);
Formula extract_formula(const Term& term, const Signature& sig);

/// Inverse of extract_formula: the η-long term the formula denotes.
Term read_back(const Formula& formula, const Signature& sig);

struct LogicProfile {
  std::size_t order = 1;
  std::size_t sorts = 0;
  friend bool operator==(const LogicProfile&, const LogicProfile&) = default;
};

/// typeOrder(base) = 1, typeOrder(A→B) = max(typeOrder(A)+1, typeOrder(B)).
std::size_t type_order(const Type& type);

/// order: the largest type_order among quantifier and Hilbert binders (1 when
/// there are none); sorts: distinct entity sorts occurring anywhere.
LogicProfile classify(const Formula& formula);

enum class Style { SExpr, Unicode };
std::string print_formula(const Formula& formula, Style style = Style::SExpr);

/// Reads the sexpr rendering back, resolving names against `sig`.
Formula parse_formula(std::string_view text, const Signature& sig);

}  // namespace glue::hol

#endif  // GLUE_HOL_HPP
