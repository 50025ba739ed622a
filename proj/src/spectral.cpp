// SPDX-License-Identifier: Apache-2.0
#include "graphopt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "graphopt/matrix.hpp"

namespace graphopt {

std::string_view to_string(SpectralMethod method) {
  return method == SpectralMethod::dense_exact ? "dense_exact" : "iterative";
}

namespace {

double residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double value) {
  return (m * v - value * v).norm() / std::max(v.norm(), 1e-300);
}

SpectralSummary dense_summary(const Graph& g, bool augmented) {
  const int n = g.n();
  SpectralSummary out;
  out.method = SpectralMethod::dense_exact;
  out.augmented = augmented;
  out.connected = g.is_connected();

  const Eigen::MatrixXd normalized = Eigen::MatrixXd(normalized_operator(g, false));
  const Eigen::MatrixXd laplacian = Eigen::MatrixXd::Identity(n, n) - normalized;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> lap(laplacian);
  out.lambda2 = lap.eigenvalues()(1);
  double bound = residual(laplacian, lap.eigenvectors().col(1), out.lambda2);

  if (!augmented) {
    out.mu2 = 1.0 - out.lambda2;
    out.mu_min = 1.0 - lap.eigenvalues()(n - 1);
    bound = std::max(bound, residual(laplacian, lap.eigenvectors().col(n - 1), lap.eigenvalues()(n - 1)));
  } else {
    const Eigen::MatrixXd prop = Eigen::MatrixXd(normalized_operator(g, true));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(prop);
    out.mu_min = es.eigenvalues()(0);
    out.mu2 = es.eigenvalues()(n - 2);
    bound = std::max({bound, residual(prop, es.eigenvectors().col(0), out.mu_min),
                      residual(prop, es.eigenvectors().col(n - 2), out.mu2)});
  }
  out.slack = std::max(std::abs(out.mu2), std::abs(out.mu_min));
  out.residual_bound = bound;
  return out;
}

// Orthonormal basis of the eigenvalue-1 eigenspace: one scaled indicator per component.
Eigen::MatrixXd top_eigenvectors(const Graph& g, bool augmented) {
  auto labels = g.component_labels();
  const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(g.n(), count);
  for (Vertex v = 0; v < g.n(); ++v) {
    double w = augmented ? g.degree(v) + 1.0 : (g.degree(v) == 0 ? 1.0 : static_cast<double>(g.degree(v)));
    q(v, labels[v]) = std::sqrt(w);
  }
  for (int c = 0; c < count; ++c) q.col(c).normalize();
  return q;
}

struct Extremes {
  double largest = 0.0, smallest = 0.0;
  double largest_residual = 0.0, smallest_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Lanczos with full reorthogonalization on the complement of span(deflate).
Extremes lanczos_extremes(const Eigen::SparseMatrix<double>& op, const Eigen::MatrixXd& deflate,
                          const SpectralOptions& options, bool need_smallest) {
  const int n = static_cast<int>(op.rows());
  const int dim = n - static_cast<int>(deflate.cols());
  Extremes out;
  if (dim <= 0) {
    out.converged = true;
    out.largest = out.smallest = 1.0;
    return out;
  }
  const int max_steps = std::min(dim, options.max_krylov);

  auto project = [&](Eigen::VectorXd& w) {
    if (deflate.cols() > 0) w -= deflate * (deflate.transpose() * w);
  };

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  project(v);
  project(v);
  v.normalize();

  Eigen::MatrixXd basis(n, max_steps);
  std::vector<double> alpha, beta;
  Eigen::VectorXd w(n);
  int next_check = 10;

  for (int j = 0; j < max_steps; ++j) {
    basis.col(j) = v;
    w = op * v;
    alpha.push_back(v.dot(w));
    w -= alpha.back() * v;
    if (j > 0) w -= beta.back() * basis.col(j - 1);
    for (int pass = 0; pass < 2; ++pass) {
      w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
      project(w);
    }
    const double b = w.norm();
    const bool exhausted = b < 1e-12 || j + 1 == max_steps;
    if (j + 1 < next_check && !exhausted) {
      beta.push_back(b);
      v = w / b;
      continue;
    }
    next_check = std::max(j + 10, static_cast<int>(1.15 * (j + 1)));

    const int k = j + 1;
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
    Eigen::VectorXd sub(std::max(k - 1, 0));
    for (int i = 0; i + 1 < k; ++i) sub(i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const auto& theta = tri.eigenvalues();
    const auto& s = tri.eigenvectors();
    const double est_hi = std::abs(b * s(k - 1, k - 1));
    const double est_lo = std::abs(b * s(k - 1, 0));
    const double tol = options.tolerance;
    const bool done = exhausted || (est_hi <= tol && (!need_smallest || est_lo <= tol));

    if (done) {
      auto ritz = [&](int idx, double value) {
        Eigen::VectorXd y = basis.leftCols(k) * s.col(idx);
        Eigen::VectorXd r = op * y - value * y;
        project(r);
        return r.norm() / y.norm();
      };
      out.largest = theta(k - 1);
      out.smallest = theta(0);
      out.largest_residual = ritz(k - 1, out.largest);
      out.smallest_residual = need_smallest ? ritz(0, out.smallest) : 0.0;
      out.iterations = k;
      out.converged = out.largest_residual <= std::max(10 * tol, 1e-7) &&
                      (!need_smallest || out.smallest_residual <= std::max(10 * tol, 1e-7));
      if (b < 1e-12) out.converged = true;
      return out;
    }
    beta.push_back(b);
    v = w / b;
  }
  return out;
}

SpectralSummary iterative_summary(const Graph& g, bool augmented, const SpectralOptions& options) {
  SpectralSummary out;
  out.method = SpectralMethod::iterative;
  out.augmented = augmented;
  const int components = g.component_count();
  out.connected = components <= 1;

  const auto normalized = normalized_operator(g, false);
  const Extremes lap = lanczos_extremes(normalized, top_eigenvectors(g, false), options, !augmented);
  out.lambda2 = out.connected ? 1.0 - lap.largest : 0.0;
  double bound = out.connected ? lap.largest_residual : 0.0;
  int iterations = lap.iterations;
  bool converged = lap.converged;

  if (!augmented) {
    out.mu2 = 1.0 - out.lambda2;
    out.mu_min = lap.smallest;
    bound = std::max(bound, lap.smallest_residual);
  } else {
    const Extremes prop = lanczos_extremes(normalized_operator(g, true), top_eigenvectors(g, true), options, true);
    out.mu2 = out.connected ? prop.largest : 1.0;
    out.mu_min = prop.smallest;
    bound = std::max({bound, out.connected ? prop.largest_residual : 0.0, prop.smallest_residual});
    iterations = std::max(iterations, prop.iterations);
    converged = converged && prop.converged;
  }
  out.slack = std::max(std::abs(out.mu2), std::abs(out.mu_min));
  out.residual_bound = bound;
  out.iterations = iterations;
  if (!converged) {
    throw ConvergenceError("Krylov budget of " + std::to_string(options.max_krylov) +
                               " exhausted; best residual " + std::to_string(bound),
                           out);
  }
  return out;
}

}  // namespace

SpectralSummary spectral_summary(const Graph& g, bool augmented, const SpectralOptions& options) {
  if (g.n() < 2) throw Error(Errc::InvalidArgument, "spectral summary needs at least two vertices");
  if (g.n() <= options.dense_limit) return dense_summary(g, augmented);
  return iterative_summary(g, augmented, options);
}

double fiedler_value(const Graph& g, const SpectralOptions& options) {
  return spectral_summary(g, false, options).lambda2;
}

}  // namespace graphopt
