// SPDX-License-Identifier: Apache-2.0
#include "graphopt/matrix.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "graphopt/error.hpp"

namespace graphopt {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::degree: return "degree";
    case MatrixKind::combinatorial_laplacian: return "combinatorial_laplacian";
    case MatrixKind::normalized_laplacian: return "normalized_laplacian";
    case MatrixKind::propagation: return "propagation";
    case MatrixKind::row_stochastic_propagation: return "row_stochastic_propagation";
  }
  return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view name) {
  for (auto kind : {MatrixKind::adjacency, MatrixKind::degree, MatrixKind::combinatorial_laplacian,
                    MatrixKind::normalized_laplacian, MatrixKind::propagation,
                    MatrixKind::row_stochastic_propagation}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(Errc::InvalidArgument, "unknown matrix kind '" + std::string(name) + "'");
}

Eigen::SparseMatrix<double> sparse_matrix_of(const Graph& g, MatrixKind kind) {
  const int n = g.n();
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(2 * g.m() + n));
  auto deg = [&](Vertex v) { return static_cast<double>(g.degree(v)); };

  switch (kind) {
    case MatrixKind::adjacency:
      for (const Edge& e : g.edges()) {
        t.emplace_back(e.u, e.v, 1.0);
        t.emplace_back(e.v, e.u, 1.0);
      }
      break;
    case MatrixKind::degree:
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 0) t.emplace_back(v, v, deg(v));
      break;
    case MatrixKind::combinatorial_laplacian:
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 0) t.emplace_back(v, v, deg(v));
      for (const Edge& e : g.edges()) {
        t.emplace_back(e.u, e.v, -1.0);
        t.emplace_back(e.v, e.u, -1.0);
      }
      break;
    case MatrixKind::normalized_laplacian:
      for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
          throw Error(Errc::IsolatedVertex,
                      "vertex " + std::to_string(v) + " has degree 0; normalized Laplacian undefined");
        }
        t.emplace_back(v, v, 1.0);
      }
      for (const Edge& e : g.edges()) {
        double w = -1.0 / std::sqrt(deg(e.u) * deg(e.v));
        t.emplace_back(e.u, e.v, w);
        t.emplace_back(e.v, e.u, w);
      }
      break;
    case MatrixKind::propagation:
      for (Vertex v = 0; v < n; ++v) t.emplace_back(v, v, 1.0 / (deg(v) + 1.0));
      for (const Edge& e : g.edges()) {
        double w = 1.0 / std::sqrt((deg(e.u) + 1.0) * (deg(e.v) + 1.0));
        t.emplace_back(e.u, e.v, w);
        t.emplace_back(e.v, e.u, w);
      }
      break;
    case MatrixKind::row_stochastic_propagation:
      for (Vertex v = 0; v < n; ++v) t.emplace_back(v, v, 1.0 / (deg(v) + 1.0));
      for (const Edge& e : g.edges()) {
        t.emplace_back(e.u, e.v, 1.0 / (deg(e.u) + 1.0));
        t.emplace_back(e.v, e.u, 1.0 / (deg(e.v) + 1.0));
      }
      break;
  }
  Eigen::SparseMatrix<double> mat(n, n);
  mat.setFromTriplets(t.begin(), t.end());
  return mat;
}

Eigen::MatrixXd matrix_of(const Graph& g, MatrixKind kind) {
  return Eigen::MatrixXd(sparse_matrix_of(g, kind));
}

Eigen::SparseMatrix<double> normalized_operator(const Graph& g, bool augmented) {
  if (augmented) return sparse_matrix_of(g, MatrixKind::propagation);
  const int n = g.n();
  std::vector<Eigen::Triplet<double>> t;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) t.emplace_back(v, v, 1.0);
  for (const Edge& e : g.edges()) {
    double w = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v));
    t.emplace_back(e.u, e.v, w);
    t.emplace_back(e.v, e.u, w);
  }
  Eigen::SparseMatrix<double> mat(n, n);
  mat.setFromTriplets(t.begin(), t.end());
  return mat;
}

}  // namespace graphopt
