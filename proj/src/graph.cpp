// SPDX-License-Identifier: Apache-2.0
#include "graphopt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphopt/error.hpp"

namespace graphopt {

namespace {

std::string pair_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::OutOfRangeVertex: return "OutOfRangeVertex";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::AdditionAlreadyPresent: return "AdditionAlreadyPresent";
    case Errc::RemovalAbsent: return "RemovalAbsent";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::InfeasibleParameters: return "InfeasibleParameters";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::MalformedEdgeLine: return "MalformedEdgeLine";
    case Errc::MalformedRational: return "MalformedRational";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::ExactLimitExceeded: return "ExactLimitExceeded";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::EmptySide: return "EmptySide";
    case Errc::ZeroVolumeSide: return "ZeroVolumeSide";
    case Errc::OddVertexCount: return "OddVertexCount";
    case Errc::DisconnectedPair: return "DisconnectedPair";
    case Errc::SameVertex: return "SameVertex";
    case Errc::EdgeAbsent: return "EdgeAbsent";
    case Errc::CertificationFailure: return "CertificationFailure";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::PadCompletionFailure: return "PadCompletionFailure";
    case Errc::ConstantConditionViolated: return "ConstantConditionViolated";
    case Errc::VerificationMismatch: return "VerificationMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::MalformedHeader:
    case Errc::MalformedEdgeLine:
    case Errc::MalformedRational:
      return 2;
    case Errc::ConvergenceFailure:
    case Errc::ExactLimitExceeded:
    case Errc::SearchSpaceTooLarge:
      return 3;
    case Errc::VerificationMismatch:
      return 5;
    default:
      return 4;
  }
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(Errc::OutOfRangeVertex,
                  "edge " + pair_text(a, b) + " has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (a == b) throw Error(Errc::SelfLoop, "edge " + pair_text(a, b) + " is a self-loop");
    canon.emplace_back(a, b);
  }
  build(n, std::move(canon));
}

Graph::Graph(int n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u >= n || e.v < 0) {
      throw Error(Errc::OutOfRangeVertex,
                  "edge " + pair_text(e.u, e.v) + " has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw Error(Errc::SelfLoop, "edge " + pair_text(e.u, e.v) + " is a self-loop");
    canon.emplace_back(e.u, e.v);
  }
  build(n, std::move(canon));
}

void Graph::build(int n, std::vector<Edge> edges) {
  if (n < 1) throw Error(Errc::InvalidArgument, "graph needs at least one vertex");
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(Errc::DuplicateEdge, "edge " + pair_text(dup->u, dup->v) + " appears more than once");
  }
  n_ = n;
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> label(n_, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n_; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adjacency_[x]) {
        if (label[y] == -1) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

int Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) sub.emplace_back(index[e.u], index[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), sub);
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  return Graph(n, edges);
}

EditSet::EditSet(std::vector<Edge> additions, std::vector<Edge> removals)
    : additions_(std::move(additions)), removals_(std::move(removals)) {
  for (auto* list : {&additions_, &removals_}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  std::vector<Edge> both;
  std::set_intersection(additions_.begin(), additions_.end(), removals_.begin(), removals_.end(),
                        std::back_inserter(both));
  if (!both.empty()) {
    throw Error(Errc::InvalidArgument,
                "pair " + pair_text(both.front().u, both.front().v) + " is both added and removed");
  }
}

EditSet EditSet::difference(const Graph& from, const Graph& to) {
  if (from.n() != to.n()) throw Error(Errc::DimensionMismatch, "graphs differ in vertex count");
  std::vector<Edge> add, remove;
  std::set_difference(to.edges().begin(), to.edges().end(), from.edges().begin(), from.edges().end(),
                      std::back_inserter(add));
  std::set_difference(from.edges().begin(), from.edges().end(), to.edges().begin(), to.edges().end(),
                      std::back_inserter(remove));
  return EditSet(std::move(add), std::move(remove));
}

EditSet EditSet::from_toggles(const Graph& g, std::span<const Edge> toggles) {
  std::vector<Edge> add, remove;
  for (const Edge& e : toggles) (g.has_edge(e) ? remove : add).push_back(e);
  return EditSet(std::move(add), std::move(remove));
}

Graph apply_edits(const Graph& g, const EditSet& edits) {
  for (const Edge& e : edits.additions()) {
    if (g.has_edge(e)) {
      throw Error(Errc::AdditionAlreadyPresent, "edge " + pair_text(e.u, e.v) + " already present");
    }
  }
  for (const Edge& e : edits.removals()) {
    if (!g.has_edge(e)) throw Error(Errc::RemovalAbsent, "edge " + pair_text(e.u, e.v) + " not present");
  }
  std::vector<Edge> kept;
  kept.reserve(g.edges().size() + edits.additions().size());
  std::set_difference(g.edges().begin(), g.edges().end(), edits.removals().begin(), edits.removals().end(),
                      std::back_inserter(kept));
  kept.insert(kept.end(), edits.additions().begin(), edits.additions().end());
  return Graph(g.n(), kept);
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace graphopt
