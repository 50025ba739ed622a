// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphopt/graph.hpp"
#include "graphopt/spectral.hpp"

namespace graphopt {

/// Node features, one row per vertex.
using FeatureMatrix = Eigen::MatrixXd;

/// P^layers X with the augmented propagation matrix. Throws DimensionMismatch.
FeatureMatrix propagate(const Graph& g, const FeatureMatrix& x, int layers);

/// trace(X^T (I - P) X), augmented P.
double dirichlet_energy(const Graph& g, const FeatureMatrix& x);

struct DecayRow {
  int layer = 0;
  double energy = 0.0;
  double s_bound = 0.0;    // s^{2L} E(X), s = max(|mu2|, |mu_min|)
  double mu2_bound = 0.0;  // mu2^{2L} E(X); informational, can be violated
};

std::vector<DecayRow> decay_report(const Graph& g, const FeatureMatrix& x, int max_layers,
                                   const SpectralOptions& options = {});

/// CSV with header "layer,energy,s_bound,mu2_bound".
std::string decay_csv(const std::vector<DecayRow>& rows);

}  // namespace graphopt
