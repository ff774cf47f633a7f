#ifndef GLUE_COMPOSER_HPP
#define GLUE_COMPOSER_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glue/lexicon.hpp"
#include "glue/sexpr.hpp"
#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue {

struct ParseTreeNode;

/// Binary function/argument tree over lexicon words.
///
/// Text form: `(LEAF word)`, `(NODE fn arg)`, `(TY tree TYPE...)`.
class ParseTree {
 public:
  struct Leaf;
  struct Node;
  struct TyAnno;

  static ParseTree leaf(std::string word);
  static ParseTree node(ParseTree fn, ParseTree arg);
  static ParseTree annotate(ParseTree sub, std::vector<Type> type_args);

  template <class T>
  const T* get() const;
  const ParseTreeNode& value() const { return *node_; }

 private:
  explicit ParseTree(std::shared_ptr<const ParseTreeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ParseTreeNode> node_;
};

struct ParseTree::Leaf {
  std::string word;
};
struct ParseTree::Node {
  ParseTree fn;
  ParseTree arg;
};
/// Forces type instantiations on the subtree's term, in order.
struct ParseTree::TyAnno {
  ParseTree sub;
  std::vector<Type> type_args;
};

struct ParseTreeNode {
  std::variant<ParseTree::Leaf, ParseTree::Node, ParseTree::TyAnno> value;
};

template <class T>
const T* ParseTree::get() const {
  return std::get_if<T>(&node_->value);
}

ParseTree parse_tree(const SExpr& expr, const Signature& sig);
/// One tree per top-level expression.
std::vector<ParseTree> read_trees(std::string_view text, const Signature& sig);
std::string print_tree(const ParseTree& tree);
/// Leaf words, left to right.
std::vector<std::string> leaves(const ParseTree& tree);

/// How one word occurrence contributed to an analysis.
struct Adaptation {
  enum class Kind { Main, Coercion, Transfer };
  Kind kind = Kind::Main;
  std::string label;  // coercion or transfer name; empty for Main
  Rigidity rigidity = Rigidity::Flexible;

  static Adaptation main() { return {}; }
  static Adaptation coercion(std::string name) { return {Kind::Coercion, std::move(name), Rigidity::Flexible}; }
  static Adaptation transfer(const TransferTerm& t) { return {Kind::Transfer, t.label, t.rigidity}; }

  std::string describe() const;
  friend bool operator==(const Adaptation&, const Adaptation&) = default;
};

/// Leaf index (left to right) → adaptations used for that occurrence.
using UsedAdaptations = std::map<std::size_t, std::vector<Adaptation>>;

struct RigidityCheck {
  std::optional<std::size_t> violating_occurrence;
  bool ok() const { return !violating_occurrence.has_value(); }
};

/// An occurrence may use {MAIN}, exactly one rigid transfer, or any mix of
/// flexible adaptations (graph coercions count as flexible) with MAIN.
RigidityCheck check_rigidity(const UsedAdaptations& used);

struct InsertedCoercion {
  std::string position;  // node path such as "root.fn", with ":slotN" for filled slots
  Term term;
};

struct Analysis {
  Term term;
  Type result_type;
  std::vector<std::string> occurrences;  // leaf words by occurrence index
  UsedAdaptations used;
  std::vector<InsertedCoercion> inserted;
};

/// One side of an application node.
struct Operand {
  Term term;
  Type type;
  /// Leaf occurrence (index, word) when the operand is a bare word; only bare
  /// words can use lexical transfers.
  std::optional<std::pair<std::size_t, std::string>> occurrence;
};

struct NodeApplication {
  Term term;
  Type type;
  UsedAdaptations used;
  std::vector<Term> inserted;  // coercions and slot fillers, in insertion order
};

/// Every way to apply `fn` to `arg`, in preference order: exact application
/// after instantiating `fn`'s leading quantifiers by matching its domain against
/// the argument type (plus transfer-slot filling); a graph coercion on the
/// argument; flexible transfers of the argument then of the function; rigid
/// transfers of the argument then of the function.
std::vector<NodeApplication> apply_node(const Operand& fn, const Operand& arg, const Lexicon& lex);

struct Diagnosis {
  enum class Kind { None, NoPath, RigidityViolation, NotAFunction };
  Kind kind = Kind::None;
  std::string position;
  std::optional<Type> expected;
  std::optional<Type> found;
  std::string occurrence;  // word, for RigidityViolation
  std::size_t depth = 0;

  bool empty() const { return kind == Kind::None; }
  std::string describe() const;
};

inline constexpr std::size_t kDefaultAnalysisLimit = 16;
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct Composition {
  std::vector<Analysis> analyses;
  Diagnosis diagnosis;  // set only when analyses is empty
};

/// Analyses distinct up to α-equivalence, in deterministic order. Throws UnknownWord.
Composition compose_with_diagnosis(const ParseTree& tree, const Lexicon& lex, std::size_t limit = kDefaultAnalysisLimit);
std::vector<Analysis> compose(const ParseTree& tree, const Lexicon& lex, std::size_t limit = kDefaultAnalysisLimit);
/// Deepest failure when the tree has no analysis; an empty Diagnosis otherwise.
Diagnosis diagnose(const ParseTree& tree, const Lexicon& lex);

}  // namespace glue

#endif  // GLUE_COMPOSER_HPP
