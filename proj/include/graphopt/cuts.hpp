// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphopt/graph.hpp"
#include "graphopt/rational.hpp"
#include "graphopt/spectral.hpp"

namespace graphopt {

/// A vertex subset with its boundary and volumes. phi is exact.
struct Cut {
  std::vector<Vertex> subset;  // sorted
  std::int64_t boundary_size = 0;
  std::int64_t vol_s = 0;
  std::int64_t vol_complement = 0;
  Rational phi;
  double phi_value() const { return phi.to_double(); }
};

/// phi(S) = |dS| / min(vol S, vol V\S). Throws EmptySide or ZeroVolumeSide.
Cut conductance_of(const Graph& g, std::span<const Vertex> s);

inline constexpr int kDefaultConductanceLimit = 24;

/// Exact phi(G) by subset enumeration; ties go to the lexicographically smallest witness,
/// which is always the side of smaller volume. Graphs with two or more components of
/// positive volume get phi = 0 and the lightest such component as witness (no limit
/// applies). An edgeless graph gets phi = 0 with witness {0}. Throws InvalidArgument for
/// n < 2 and ExactLimitExceeded above `exact_limit`.
Cut conductance_exact(const Graph& g, int exact_limit = kDefaultConductanceLimit);

struct CheegerInterval {
  double lower = 0.0;  // lambda2 / 2
  double upper = 0.0;  // sqrt(2 lambda2), unclipped
  double upper_clipped() const { return upper < 1.0 ? upper : 1.0; }
  bool contains(double phi, double slack = 1e-9) const { return phi >= lower - slack && phi <= upper + slack; }
};

CheegerInterval cheeger_interval(const SpectralSummary& summary);
CheegerInterval cheeger_interval(double lambda2);

struct BisectionResult {
  std::int64_t width = 0;
  std::vector<Vertex> partition;    // |S| = n/2, contains vertex 0
  std::optional<bool> within_budget;  // width <= B when a budget was given
};

inline constexpr int kDefaultBisectionLimit = 20;

/// Exact minimum bisection. The scan is never cut short, so the witness does not depend
/// on the budget. Throws OddVertexCount or ExactLimitExceeded.
BisectionResult min_bisection_exact(const Graph& h, std::optional<std::int64_t> budget_b = std::nullopt,
                                    int exact_limit = kDefaultBisectionLimit);

/// Exact "min bisection width <= b" by pruned search (n <= 63); returns a witness side
/// containing vertex 0 when the answer is yes. Throws OddVertexCount, ExactLimitExceeded.
std::optional<std::vector<Vertex>> bisection_within(const Graph& h, std::int64_t b);

struct BalancedCut {
  std::vector<Vertex> subset;
  std::int64_t initial_boundary = 0;
  std::int64_t final_boundary = 0;
  double factor = 1.0;  // final / max(1, initial)
};

/// Greedy rebalancing: repeatedly moves the vertex of the larger side whose move adds the
/// fewest crossing edges (smallest id on ties) until |S| = n/2. Throws OddVertexCount,
/// EmptySide.
BalancedCut balance_cut(const Graph& h, std::span<const Vertex> s);

/// Number of edges with exactly one endpoint in `s` (membership flags).
std::int64_t crossing_edges(const Graph& g, const std::vector<char>& in_s);

}  // namespace graphopt
