// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "graphopt/cuts.hpp"
#include "graphopt/graph.hpp"
#include "graphopt/spectral.hpp"

namespace graphopt {

enum class GreedyObjective { spectral_gap, conductance };
std::string_view to_string(GreedyObjective objective);
GreedyObjective parse_greedy_objective(std::string_view name);

struct RewireStep {
  std::string action;  // "add", "remove" or "skip"
  Edge pair;
  double score = 0.0;  // objective after the step, resistance, curvature or PPR mass
};

struct RewireResult {
  EditSet edits;             // net difference between input and output
  Graph graph;               // rewired graph
  std::vector<double> trace; // greedy: objective before any step, then after each step
  std::vector<RewireStep> steps;
};

struct GreedyOptions {
  int conductance_limit = kDefaultConductanceLimit;
  SpectralOptions spectral;
};

/// Applies, up to `budget` times, the single toggle with the strictly largest objective
/// gain (smallest pair on ties); stops when nothing improves. The conductance objective
/// is exact and throws ExactLimitExceeded above the enumeration limit.
RewireResult greedy_rewire(const Graph& g, int budget, GreedyObjective objective, const GreedyOptions& options = {});

/// (e_u - e_v)^T L^+ (e_u - e_v). Throws SameVertex, DisconnectedPair, OutOfRangeVertex.
double effective_resistance(const Graph& g, Vertex u, Vertex v);

/// All-pairs effective resistance; +infinity across components, 0 on the diagonal.
Eigen::MatrixXd resistance_matrix(const Graph& g);

/// 4 - d_u - d_v + 3 * #triangles(u, v). Throws EdgeAbsent.
double forman_curvature(const Graph& g, const Edge& e);

/// Step t (from 0) removes iff floor((t+1) f) > floor(t f), otherwise adds. Additions take the
/// non-edge of largest effective resistance; removals take the most negatively curved edge
/// whose removal keeps the component count. Ties go to the lexicographically smallest pair.
RewireResult sdrf_like_rewire(const Graph& g, int budget, double removal_fraction);

/// alpha (I - (1 - alpha) D~^{-1} A~)^{-1}; row i is the personalized PageRank vector of i.
/// Throws InvalidArgument unless 0 < alpha < 1, SingularSystem if the solve fails.
Eigen::MatrixXd ppr_matrix(const Graph& g, double alpha);

/// Keeps, per node, the `per_node_cap` largest off-diagonal PPR entries above epsilon
/// (smaller index on ties), symmetrizes, and adds every kept pair that is not an edge.
RewireResult ppr_rewire(const Graph& g, double alpha, double epsilon, int per_node_cap);

}  // namespace graphopt
