// SPDX-License-Identifier: Apache-2.0
#include "graphopt/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "graphopt/error.hpp"

namespace graphopt {

Graph complete_graph(int n) {
  if (n < 1) throw Error(Errc::InfeasibleParameters, "complete graph needs n >= 1");
  auto pairs = all_pairs(n);
  return Graph(n, pairs);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::InfeasibleParameters, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::InfeasibleParameters, "G(n,p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InfeasibleParameters, "G(n,p) needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_regular_graph(int n, int d, std::uint64_t seed, int max_attempts) {
  if (n < 1 || d < 0) throw Error(Errc::InfeasibleParameters, "random regular graph needs n >= 1, d >= 0");
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw Error(Errc::InfeasibleParameters,
                "n*d must be even (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  if (d >= n && !(d == 0)) throw Error(Errc::InfeasibleParameters, "degree must be below n");

  std::mt19937_64 rng(seed);
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    stubs.clear();
    for (Vertex v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        simple = false;
        break;
      }
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, edges);
  }
  throw Error(Errc::InfeasibleParameters, "no simple " + std::to_string(d) + "-regular graph found after " +
                                              std::to_string(max_attempts) + " attempts");
}

Graph barbell_graph(int k) {
  if (k < 3) throw Error(Errc::InfeasibleParameters, "barbell needs k >= 3");
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    int base = side * k;
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(base + u, base + v);
  }
  edges.emplace_back(k - 1, k);
  return Graph(2 * k, edges);
}

}  // namespace graphopt
