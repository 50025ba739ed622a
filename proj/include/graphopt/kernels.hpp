// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphopt/graph.hpp"

// Enumeration kernels behind the exact cut computations. Each parallel kernel has a
// plain serial reference kept for tests and benchmarks; both return the same witness
// because ties are broken by a total order, not by arrival.
namespace graphopt::kernels {

using Mask = std::uint64_t;

/// Bitset adjacency for graphs with at most 63 vertices.
struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;
  std::vector<int> degree;
  std::int64_t total_volume = 0;

  explicit BitGraph(const Graph& g);
  Mask full() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
  std::int64_t boundary(Mask s) const;
  std::int64_t volume(Mask s) const;
};

/// Lexicographic order on the sorted vertex lists of two subsets.
bool lex_less(Mask a, Mask b);
std::vector<Vertex> mask_to_vertices(Mask s);
Mask vertices_to_mask(const std::vector<Vertex>& vertices);

struct CutScan {
  bool found = false;
  Mask subset = 0;            // side with the smaller volume (lex-smaller side on ties)
  std::int64_t boundary = 0;  // |dS|
  std::int64_t volume = 0;    // min(vol S, vol V\S) > 0
};

/// Minimum conductance over all cuts with a positive-volume small side. Gray-code walk
/// over 2^(n-1) - 1 subsets split across OpenMP threads.
CutScan min_conductance_scan(const BitGraph& g);
/// Reference: every subset with 0 < vol(S) <= vol(V)/2, boundary by edge scan.
CutScan min_conductance_scan_serial(const Graph& g);

struct BisectionScan {
  Mask subset = 0;  // balanced side containing vertex 0
  std::int64_t width = 0;
};

/// Minimum width over balanced partitions; enumerates the C(n-1, n/2-1) halves that
/// contain vertex 0, in colex-ranked chunks across OpenMP threads. n must be even.
BisectionScan min_bisection_scan(const BitGraph& g);
/// Reference: recursive enumeration with width by edge scan.
BisectionScan min_bisection_scan_serial(const Graph& g);

/// Exact decision "is there a balanced partition of width <= budget": depth-first search
/// over side assignments (highest degree first) pruned by the crossing edges already fixed
/// plus, for every unassigned vertex, the smaller of its assigned neighbour counts.
/// Returns a witness side when one exists. n must be even.
std::optional<Mask> bisection_within(const BitGraph& g, std::int64_t budget);

}  // namespace graphopt::kernels
