#ifndef GLUE_COERCION_HPP
#define GLUE_COERCION_HPP

#include <optional>
#include <string>
#include <vector>

#include "glue/error.hpp"
#include "glue/signature.hpp"
#include "glue/term.hpp"
#include "glue/type.hpp"

namespace glue {

/// A declared subtyping map between two entity sorts, e.g. `dogIsAnimal : e:dog -> e:ani`.
struct BaseCoercion {
  std::string name;
  std::string from;
  std::string to;

  Type type() const { return Type::arrow(Type::entity(from), Type::entity(to)); }
  Term constant() const { return Term::constant(name, type()); }
  friend bool operator==(const BaseCoercion&, const BaseCoercion&) = default;
};

class CoercionGraph {
 public:
  CoercionGraph() = default;
  explicit CoercionGraph(std::vector<std::string> nodes) : nodes_(std::move(nodes)) {}

  void add_node(const std::string& sort);
  /// Throws Error on a self-loop.
  void add_edge(BaseCoercion edge);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<BaseCoercion>& edges() const { return edges_; }

 private:
  std::vector<std::string> nodes_;
  std::vector<BaseCoercion> edges_;
};

struct CoherenceViolation {
  enum class Kind { MultiplePaths, Cycle };
  Kind kind = Kind::MultiplePaths;
  std::string from;
  std::string to;
  /// MultiplePaths: two distinct witness paths (edge names). Cycle: one path
  /// (edge names) leading from `from` back to itself.
  std::vector<std::vector<std::string>> paths;
};

struct CoherenceReport {
  std::vector<CoherenceViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Acyclicity plus at most one directed path for every ordered pair of sorts.
CoherenceReport check_coherence(const CoercionGraph& graph);

std::string describe(const CoherenceViolation& violation);

class IncoherentGraph : public Error {
 public:
  explicit IncoherentGraph(const std::string& detail) : Error("incoherent coercion graph: " + detail) {}
};

class BrokenChain : public Error {
 public:
  explicit BrokenChain(const std::string& detail) : Error("broken coercion chain: " + detail) {}
};

/// λx. c_n (... (c_1 x)); a singleton path is the constant itself.
Term compose_path(const std::vector<BaseCoercion>& edges);

/// Search direction over the graph; coherent graphs give α-equivalent answers
/// for both.
enum class SearchOrder { Forward, Reverse };

/// The derived coercion from `from` to `to`, or nullopt when none exists.
///
/// Reflexivity yields λx.x; entity sorts compose their unique path; arrows lift
/// contravariantly in the domain and covariantly in the codomain, dropping
/// identity components. `t`, type variables, sets and ∀-types coerce only to
/// α-equivalent types. Throws IncoherentGraph when the pair has more than one
/// path or sits on a cycle.
std::optional<Term> find_coercion(const CoercionGraph& graph, const Signature& sig, const Type& from, const Type& to,
                                  SearchOrder order = SearchOrder::Forward);

/// Edges of the unique path between two entity sorts (empty when from == to).
std::optional<std::vector<BaseCoercion>> find_path(const CoercionGraph& graph, const std::string& from,
                                                   const std::string& to, SearchOrder order = SearchOrder::Forward);

}  // namespace glue

#endif  // GLUE_COERCION_HPP
