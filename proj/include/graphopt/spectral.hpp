// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

#include "graphopt/error.hpp"
#include "graphopt/graph.hpp"

namespace graphopt {

enum class SpectralMethod { dense_exact, iterative };
std::string_view to_string(SpectralMethod method);

struct SpectralSummary {
  double lambda2 = 0.0;  // Fiedler value of the normalized Laplacian
  double mu2 = 0.0;      // second-largest eigenvalue of P
  double mu_min = 0.0;   // smallest eigenvalue of P
  double slack = 0.0;    // max(|mu2|, |mu_min|)
  SpectralMethod method = SpectralMethod::dense_exact;
  double residual_bound = 0.0;
  bool augmented = true;  // P = D~^{-1/2} A~ D~^{-1/2}; otherwise D^{-1/2} A D^{-1/2}
  bool connected = true;
  int iterations = 0;
};

struct SpectralOptions {
  int dense_limit = 512;
  double tolerance = 1e-9;  // target residual for the iterative path
  int max_krylov = 1500;
  std::uint64_t seed = 0x5eed;
};

/// lambda2 comes from I - D^{-1/2} A D^{-1/2} with the usual convention for degree-0 vertices
/// (zero row), so a graph with an isolated vertex and n >= 2 has lambda2 = 0. Throws
/// InvalidArgument for n < 2 and ConvergenceError when the Krylov budget runs out.
SpectralSummary spectral_summary(const Graph& g, bool augmented = true, const SpectralOptions& options = {});

/// Thrown by the iterative path; carries the best estimate reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, SpectralSummary best)
      : Error(Errc::ConvergenceFailure, message), best_(best) {}
  const SpectralSummary& best() const noexcept { return best_; }

 private:
  SpectralSummary best_;
};

/// Fiedler value only (non-augmented normalized Laplacian).
double fiedler_value(const Graph& g, const SpectralOptions& options = {});

}  // namespace graphopt
