// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "graphopt/graph.hpp"

namespace graphopt {

enum class MatrixKind {
  adjacency,                   // A
  degree,                      // D
  combinatorial_laplacian,     // L = D - A
  normalized_laplacian,        // I - D^{-1/2} A D^{-1/2}
  propagation,                 // D~^{-1/2} A~ D~^{-1/2}, A~ = A + I, D~ = D + I
  row_stochastic_propagation,  // D~^{-1} A~, cospectral with propagation
};

std::string_view to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(std::string_view name);

/// Dense n x n matrix. Throws IsolatedVertex for normalized_laplacian on a graph with a degree-0 vertex.
Eigen::MatrixXd matrix_of(const Graph& g, MatrixKind kind);
Eigen::SparseMatrix<double> sparse_matrix_of(const Graph& g, MatrixKind kind);

/// Dense/sparse backend switch used by the numerical modules.
struct MatrixBackend {
  int dense_limit = 512;
  bool use_dense(int n) const { return n <= dense_limit; }
};

/// Symmetric normalized adjacency used for spectral work. With `augmented` this is the
/// propagation matrix. Without it, degree-0 vertices get a unit diagonal, so the matching
/// Laplacian I - N has eigenvalue 0 on every isolated vertex.
Eigen::SparseMatrix<double> normalized_operator(const Graph& g, bool augmented);

}  // namespace graphopt
