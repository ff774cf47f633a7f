#include "glue/coercion.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "glue/kernel.hpp"

namespace glue {

void CoercionGraph::add_node(const std::string& sort) {
  if (std::find(nodes_.begin(), nodes_.end(), sort) == nodes_.end()) nodes_.push_back(sort);
}

void CoercionGraph::add_edge(BaseCoercion edge) {
  if (edge.from == edge.to) throw Error("coercion " + edge.name + " maps e:" + edge.from + " to itself");
  add_node(edge.from);
  add_node(edge.to);
  edges_.push_back(std::move(edge));
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

CoherenceReport check_coherence(const CoercionGraph& graph) {
  CoherenceReport report;
  const auto& edges = graph.edges();

  // Cycles: DFS colouring; every back edge closes one cycle.
  std::map<std::string, int> colour;
  std::vector<const BaseCoercion*> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& node) {
    colour[node] = 1;
    for (const auto& e : edges) {
      if (e.from != node) continue;
      if (colour[e.to] == 1) {
        CoherenceViolation v{CoherenceViolation::Kind::Cycle, e.to, e.to, {{}}};
        auto start = std::find_if(stack.begin(), stack.end(), [&](const auto* s) { return s->from == e.to; });
        for (auto it = start; it != stack.end(); ++it) v.paths[0].push_back((*it)->name);
        v.paths[0].push_back(e.name);
        report.violations.push_back(std::move(v));
      } else if (colour[e.to] == 0) {
        stack.push_back(&e);
        visit(e.to);
        stack.pop_back();
      }
    }
    colour[node] = 2;
  };
  for (const auto& node : graph.nodes())
    if (colour[node] == 0) visit(node);

  // Path uniqueness: enumerate simple paths from each source.
  for (const auto& source : graph.nodes()) {
    std::map<std::string, std::vector<std::vector<std::string>>> found;
    std::vector<std::string> on_path{source};
    std::vector<std::string> path;
    std::function<void(const std::string&)> walk = [&](const std::string& node) {
      for (const auto& e : edges) {
        if (e.from != node) continue;
        if (std::find(on_path.begin(), on_path.end(), e.to) != on_path.end()) continue;
        path.push_back(e.name);
        auto& witnesses = found[e.to];
        if (witnesses.size() < 2) witnesses.push_back(path);
        on_path.push_back(e.to);
        walk(e.to);
        on_path.pop_back();
        path.pop_back();
      }
    };
    walk(source);
    for (const auto& target : graph.nodes()) {
      auto it = found.find(target);
      if (it != found.end() && it->second.size() >= 2)
        report.violations.push_back({CoherenceViolation::Kind::MultiplePaths, source, target, it->second});
    }
  }
  return report;
}

std::string describe(const CoherenceViolation& v) {
  if (v.kind == CoherenceViolation::Kind::Cycle)
    return "CycleDetected(" + v.from + ": " + join(v.paths.front(), " ") + ")";
  std::string out = "MultiplePaths(" + v.from + ", " + v.to + ")";
  for (const auto& p : v.paths) out += " [" + join(p, " ") + "]";
  return out;
}

Term compose_path(const std::vector<BaseCoercion>& edges) {
  if (edges.empty()) throw BrokenChain("empty path");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i - 1].to != edges[i].from)
      throw BrokenChain(edges[i - 1].name + " ends at e:" + edges[i - 1].to + " but " + edges[i].name +
                        " starts at e:" + edges[i].from);
  if (edges.size() == 1) return edges.front().constant();
  Term body = Term::var("x");
  for (const auto& e : edges) body = Term::app(e.constant(), body);
  return Term::lam("x", Type::entity(edges.front().from), body);
}

std::optional<std::vector<BaseCoercion>> find_path(const CoercionGraph& graph, const std::string& from,
                                                   const std::string& to, SearchOrder order) {
  if (from == to) return std::vector<BaseCoercion>{};
  const auto& edges = graph.edges();
  const bool forward = order == SearchOrder::Forward;
  const std::string& start = forward ? from : to;
  const std::string& goal = forward ? to : from;

  std::vector<std::vector<BaseCoercion>> found;
  std::vector<std::string> on_path{start};
  std::vector<BaseCoercion> path;
  std::function<void(const std::string&)> walk = [&](const std::string& node) {
    auto step = [&](const BaseCoercion& e) {
      const std::string& here = forward ? e.from : e.to;
      const std::string& next = forward ? e.to : e.from;
      if (here != node) return;
      if (std::find(on_path.begin(), on_path.end(), next) != on_path.end())
        throw IncoherentGraph("cycle through e:" + next);
      path.push_back(e);
      if (next == goal) {
        found.push_back(path);
        if (found.size() > 1) throw IncoherentGraph("more than one path from e:" + from + " to e:" + to);
      }
      // Keep walking past the goal so that a cycle through it is noticed.
      on_path.push_back(next);
      walk(next);
      on_path.pop_back();
      path.pop_back();
    };
    if (forward)
      for (const auto& e : edges) step(e);
    else
      for (auto it = edges.rbegin(); it != edges.rend(); ++it) step(*it);
  };
  walk(start);
  if (found.empty()) return std::nullopt;
  auto out = found.front();
  if (!forward) std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// nullopt: no coercion. Inner nullopt: the identity.
using Derived = std::optional<std::optional<Term>>;

Derived derive(const CoercionGraph& graph, const Signature& sig, const Type& from, const Type& to, SearchOrder order) {
  if (alpha_eq(from, to)) return std::optional<Term>{};
  const auto* fb = from.get<Type::Base>();
  const auto* tb = to.get<Type::Base>();
  if (fb != nullptr && tb != nullptr) {
    if (fb->sort.is_prop() || tb->sort.is_prop()) return std::nullopt;
    auto path = find_path(graph, fb->sort.name, tb->sort.name, order);
    if (!path) return std::nullopt;
    for (const auto& e : *path) {
      auto declared = sig.lookup(e.name);
      if (!declared || !alpha_eq(*declared, e.type()))
        throw Error("coercion " + e.name + " is not declared with type " + print_type(e.type()));
    }
    return std::optional<Term>{compose_path(*path)};
  }
  const auto* fa = from.get<Type::Arrow>();
  const auto* ta = to.get<Type::Arrow>();
  if (fa == nullptr || ta == nullptr) return std::nullopt;
  // (A→B) to (A'→B'): c : A'→A on the domain, d : B→B' on the codomain.
  Derived dom;
  Derived cod;
  if (order == SearchOrder::Forward) {
    dom = derive(graph, sig, ta->domain, fa->domain, order);
    if (!dom) return std::nullopt;
    cod = derive(graph, sig, fa->codomain, ta->codomain, order);
  } else {
    cod = derive(graph, sig, fa->codomain, ta->codomain, order);
    if (!cod) return std::nullopt;
    dom = derive(graph, sig, ta->domain, fa->domain, order);
  }
  if (!dom || !cod) return std::nullopt;
  Term x = Term::var("x");
  if (*dom) x = Term::app(**dom, x);
  Term body = Term::app(Term::var("f"), x);
  if (*cod) body = Term::app(**cod, body);
  return std::optional<Term>{Term::lam("f", from, Term::lam("x", ta->domain, body))};
}

}  // namespace

std::optional<Term> find_coercion(const CoercionGraph& graph, const Signature& sig, const Type& from, const Type& to,
                                  SearchOrder order) {
  auto derived = derive(graph, sig, from, to, order);
  if (!derived) return std::nullopt;
  if (*derived) return **derived;
  return Term::lam("x", from, Term::var("x"));
}

}  // namespace glue
