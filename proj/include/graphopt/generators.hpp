// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "graphopt/graph.hpp"

namespace graphopt {

Graph complete_graph(int n);
Graph cycle_graph(int n);
/// Erdos-Renyi G(n,p); deterministic for a given seed.
Graph gnp_graph(int n, double p, std::uint64_t seed);
/// Uniform-ish random d-regular simple graph via the pairing model, retried until simple.
/// Throws InfeasibleParameters when n*d is odd or d >= n.
Graph random_regular_graph(int n, int d, std::uint64_t seed, int max_attempts = 10000);
/// Two copies of K_k on {0..k-1} and {k..2k-1} joined by the bridge (k-1, k).
Graph barbell_graph(int k);

}  // namespace graphopt
