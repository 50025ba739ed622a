// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace graphopt {

using Vertex = int;

/// Unordered vertex pair stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor. Throws OutOfRangeVertex, SelfLoop or DuplicateEdge.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::span<const Edge> edges);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  /// Edges in sorted canonical order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted neighbour list of v.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const noexcept;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Component id per vertex, ids assigned in order of smallest member.
  std::vector<int> component_labels() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }

  /// Induced subgraph on `vertices`, relabelled in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Builds a graph from a pair list; the named operation behind `Graph`'s constructor.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

/// A budgeted set of edge additions and removals (the symmetric difference E' xor E).
class EditSet {
 public:
  EditSet() = default;
  /// Throws InvalidArgument when a pair is both added and removed.
  EditSet(std::vector<Edge> additions, std::vector<Edge> removals);

  const std::vector<Edge>& additions() const noexcept { return additions_; }
  const std::vector<Edge>& removals() const noexcept { return removals_; }
  int size() const noexcept { return static_cast<int>(additions_.size() + removals_.size()); }
  bool empty() const noexcept { return size() == 0; }

  EditSet inverse() const { return EditSet(removals_, additions_); }

  /// Edit set whose toggles turn `from` into `to` (same vertex count required).
  static EditSet difference(const Graph& from, const Graph& to);
  /// Interprets every pair as a toggle against `g`: present pairs become removals.
  static EditSet from_toggles(const Graph& g, std::span<const Edge> toggles);

  friend bool operator==(const EditSet&, const EditSet&) = default;

 private:
  std::vector<Edge> additions_;
  std::vector<Edge> removals_;
};

/// E' = (E \ removals) u additions. Throws AdditionAlreadyPresent or RemovalAbsent.
Graph apply_edits(const Graph& g, const EditSet& edits);

/// All C(n,2) vertex pairs in lexicographic order.
std::vector<Edge> all_pairs(int n);

}  // namespace graphopt
