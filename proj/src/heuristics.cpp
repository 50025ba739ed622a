// SPDX-License-Identifier: Apache-2.0
#include "graphopt/heuristics.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "graphopt/error.hpp"
#include "graphopt/matrix.hpp"

namespace graphopt {

std::string_view to_string(GreedyObjective objective) {
  return objective == GreedyObjective::spectral_gap ? "spectral_gap" : "conductance";
}

GreedyObjective parse_greedy_objective(std::string_view name) {
  if (name == "spectral_gap") return GreedyObjective::spectral_gap;
  if (name == "conductance") return GreedyObjective::conductance;
  throw Error(Errc::InvalidArgument, "objective must be 'spectral_gap' or 'conductance'");
}

namespace {

Graph toggle(const Graph& g, const Edge& e) {
  return g.has_edge(e) ? apply_edits(g, EditSet({}, {e})) : apply_edits(g, EditSet({e}, {}));
}

}  // namespace

RewireResult greedy_rewire(const Graph& g, int budget, GreedyObjective objective, const GreedyOptions& options) {
  if (budget < 0) throw Error(Errc::InvalidArgument, "budget must be non-negative");
  const bool by_phi = objective == GreedyObjective::conductance;
  if (by_phi && g.n() > options.conductance_limit) {
    throw Error(Errc::ExactLimitExceeded, "exact conductance limited to n <= " +
                                              std::to_string(options.conductance_limit));
  }
  auto score = [&](const Graph& h) -> Rational {
    return conductance_exact(h, options.conductance_limit).phi;
  };
  auto gap = [&](const Graph& h) { return fiedler_value(h, options.spectral); };

  RewireResult out;
  out.graph = g;
  Rational cur_phi = by_phi ? score(g) : Rational(0);
  double cur = by_phi ? cur_phi.to_double() : gap(g);
  out.trace.push_back(cur);
  const auto pairs = all_pairs(g.n());
  const auto count = static_cast<std::int64_t>(pairs.size());

  for (int step = 0; step < budget; ++step) {
    std::vector<Rational> phis(pairs.size());
    std::vector<double> gaps(pairs.size(), -1.0);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      const Graph h = toggle(out.graph, pairs[i]);
      if (by_phi)
        phis[i] = score(h);
      else
        gaps[i] = gap(h);
    }
    std::int64_t pick = -1;
    for (std::int64_t i = 0; i < count; ++i) {
      if (by_phi) {
        const Rational& ref = pick < 0 ? cur_phi : phis[pick];
        if (phis[i] > ref) pick = i;
      } else {
        const double ref = pick < 0 ? cur + 1e-12 : gaps[pick];
        if (gaps[i] > ref) pick = i;
      }
    }
    if (pick < 0) break;
    const bool removal = out.graph.has_edge(pairs[pick]);
    out.graph = toggle(out.graph, pairs[pick]);
    if (by_phi) {
      cur_phi = phis[pick];
      cur = cur_phi.to_double();
    } else {
      cur = gaps[pick];
    }
    out.trace.push_back(cur);
    out.steps.push_back({removal ? "remove" : "add", pairs[pick], cur});
  }
  out.edits = EditSet::difference(g, out.graph);
  return out;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.n()) throw Error(Errc::OutOfRangeVertex, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

double effective_resistance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw Error(Errc::SameVertex, "effective resistance needs two distinct vertices");
  const auto labels = g.component_labels();
  if (labels[u] != labels[v]) {
    throw Error(Errc::DisconnectedPair, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                            " lie in different components");
  }
  // Ground v inside the component and solve the reduced Laplacian system for a unit current.
  std::vector<int> index(g.n(), -1);
  int k = 0;
  for (Vertex x = 0; x < g.n(); ++x)
    if (labels[x] == labels[u] && x != v) index[x] = k++;
  std::vector<Eigen::Triplet<double>> trips;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (index[x] < 0) continue;
    trips.emplace_back(index[x], index[x], g.degree(x));
    for (Vertex y : g.neighbors(x))
      if (index[y] >= 0) trips.emplace_back(index[x], index[y], -1.0);
  }
  Eigen::SparseMatrix<double> lap(k, k);
  lap.setFromTriplets(trips.begin(), trips.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
  if (solver.info() != Eigen::Success) throw Error(Errc::SingularSystem, "grounded Laplacian factorization failed");
  Eigen::VectorXd b = Eigen::VectorXd::Zero(k);
  b(index[u]) = 1.0;
  const Eigen::VectorXd x = solver.solve(b);
  return x(index[u]);
}

Eigen::MatrixXd resistance_matrix(const Graph& g) {
  const int n = g.n();
  Eigen::MatrixXd r = Eigen::MatrixXd::Constant(n, n, std::numeric_limits<double>::infinity());
  const auto labels = g.component_labels();
  const int count = n == 0 ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  for (int c = 0; c < count; ++c) {
    std::vector<Vertex> members;
    std::vector<int> index(n, -1);
    for (Vertex x = 0; x < n; ++x)
      if (labels[x] == c) {
        index[x] = static_cast<int>(members.size());
        members.push_back(x);
      }
    const int k = static_cast<int>(members.size());
    // L^+ = (L + J/k)^{-1} - J/k on a connected component.
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(k, k, 1.0 / k);
    for (int i = 0; i < k; ++i) {
      m(i, i) += g.degree(members[i]);
      for (Vertex y : g.neighbors(members[i])) m(i, index[y]) -= 1.0;
    }
    const Eigen::MatrixXd inv = m.ldlt().solve(Eigen::MatrixXd::Identity(k, k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r(members[i], members[j]) = inv(i, i) + inv(j, j) - 2.0 * inv(i, j);
  }
  for (int i = 0; i < n; ++i) r(i, i) = 0.0;
  return r;
}

double forman_curvature(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw Error(Errc::EdgeAbsent, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  const auto& a = g.neighbors(e.u);
  const auto& b = g.neighbors(e.v);
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return 4.0 - g.degree(e.u) - g.degree(e.v) + 3.0 * static_cast<double>(common.size());
}

RewireResult sdrf_like_rewire(const Graph& g, int budget, double removal_fraction) {
  if (budget < 0) throw Error(Errc::InvalidArgument, "budget must be non-negative");
  if (!(removal_fraction >= 0.0 && removal_fraction <= 1.0)) {
    throw Error(Errc::InvalidArgument, "removal fraction must lie in [0, 1]");
  }
  RewireResult out;
  out.graph = g;
  for (int t = 0; t < budget; ++t) {
    const bool removal = std::floor((t + 1) * removal_fraction) > std::floor(t * removal_fraction);
    const Graph& cur = out.graph;
    if (removal) {
      std::vector<std::pair<double, Edge>> ranked;
      for (const Edge& e : cur.edges()) ranked.emplace_back(forman_curvature(cur, e), e);
      std::sort(ranked.begin(), ranked.end());
      const int components = cur.component_count();
      bool done = false;
      for (const auto& [curv, e] : ranked) {
        Graph next = apply_edits(cur, EditSet({}, {e}));
        if (next.component_count() != components) continue;
        out.steps.push_back({"remove", e, curv});
        out.graph = std::move(next);
        done = true;
        break;
      }
      if (!done) out.steps.push_back({"skip", Edge{}, 0.0});
    } else {
      const auto r = resistance_matrix(cur);
      bool found = false;
      Edge pick;
      double best = 0.0;
      for (Vertex u = 0; u < cur.n(); ++u)
        for (Vertex v = u + 1; v < cur.n(); ++v) {
          if (cur.has_edge(u, v)) continue;
          if (!found || r(u, v) > best) {
            found = true;
            best = r(u, v);
            pick = Edge(u, v);
          }
        }
      if (!found) {
        out.steps.push_back({"skip", Edge{}, 0.0});
        continue;
      }
      out.steps.push_back({"add", pick, best});
      out.graph = apply_edits(cur, EditSet({pick}, {}));
    }
  }
  out.edits = EditSet::difference(g, out.graph);
  return out;
}

Eigen::MatrixXd ppr_matrix(const Graph& g, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(Errc::InvalidArgument, "alpha must lie strictly between 0 and 1");
  const int n = g.n();
  const Eigen::MatrixXd t = matrix_of(g, MatrixKind::row_stochastic_propagation);
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - (1.0 - alpha) * t;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  Eigen::MatrixXd pi = alpha * lu.solve(Eigen::MatrixXd::Identity(n, n));
  if (!pi.allFinite()) throw Error(Errc::SingularSystem, "PPR system is singular");
  return pi;
}

RewireResult ppr_rewire(const Graph& g, double alpha, double epsilon, int per_node_cap) {
  if (epsilon < 0.0) throw Error(Errc::InvalidArgument, "epsilon must be non-negative");
  if (per_node_cap < 0) throw Error(Errc::InvalidArgument, "per-node cap must be non-negative");
  const Eigen::MatrixXd pi = ppr_matrix(g, alpha);
  const int n = g.n();
  std::set<Edge> kept;
  for (Vertex i = 0; i < n; ++i) {
    std::vector<Vertex> cand;
    for (Vertex j = 0; j < n; ++j)
      if (j != i && pi(i, j) > epsilon) cand.push_back(j);
    // Ranked on values rounded to 1e-12 so solver noise cannot reorder symmetric ties.
    auto key = [&](Vertex j) { return std::llround(pi(i, j) * 1e12); };
    std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return key(a) > key(b); });
    if (static_cast<int>(cand.size()) > per_node_cap) cand.resize(per_node_cap);
    for (Vertex j : cand) kept.insert(Edge(i, j));
  }
  RewireResult out;
  std::vector<Edge> additions;
  for (const Edge& e : kept) {
    if (g.has_edge(e)) continue;
    additions.push_back(e);
    out.steps.push_back({"add", e, std::max(pi(e.u, e.v), pi(e.v, e.u))});
  }
  out.edits = EditSet(additions, {});
  out.graph = apply_edits(g, out.edits);
  return out;
}

}  // namespace graphopt
