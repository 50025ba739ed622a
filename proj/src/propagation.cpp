// SPDX-License-Identifier: Apache-2.0
#include "graphopt/propagation.hpp"

#include <cmath>
#include <cstdio>

#include "graphopt/error.hpp"
#include "graphopt/matrix.hpp"

namespace graphopt {

namespace {

void check_rows(const Graph& g, const FeatureMatrix& x) {
  if (x.rows() != g.n()) {
    throw Error(Errc::DimensionMismatch, "feature matrix has " + std::to_string(x.rows()) + " rows, graph has " +
                                             std::to_string(g.n()) + " vertices");
  }
}

double energy_with(const Eigen::SparseMatrix<double>& p, const FeatureMatrix& x) {
  const FeatureMatrix px = p * x;
  return std::max(0.0, x.squaredNorm() - (x.array() * px.array()).sum());
}

}  // namespace

FeatureMatrix propagate(const Graph& g, const FeatureMatrix& x, int layers) {
  check_rows(g, x);
  if (layers < 0) throw Error(Errc::InvalidArgument, "layer count must be non-negative");
  const auto p = normalized_operator(g, true);
  FeatureMatrix out = x;
  for (int l = 0; l < layers; ++l) out = p * out;
  return out;
}

double dirichlet_energy(const Graph& g, const FeatureMatrix& x) {
  check_rows(g, x);
  return energy_with(normalized_operator(g, true), x);
}

std::vector<DecayRow> decay_report(const Graph& g, const FeatureMatrix& x, int max_layers,
                                   const SpectralOptions& options) {
  check_rows(g, x);
  if (max_layers < 0) throw Error(Errc::InvalidArgument, "layer count must be non-negative");
  double s = 0.0, mu2 = 0.0;
  if (g.n() >= 2) {
    const auto summary = spectral_summary(g, true, options);
    s = summary.slack;
    mu2 = summary.mu2;
  }
  const auto p = normalized_operator(g, true);
  const double e0 = energy_with(p, x);
  std::vector<DecayRow> rows;
  FeatureMatrix cur = x;
  for (int l = 0; l <= max_layers; ++l) {
    if (l > 0) cur = p * cur;
    rows.push_back({l, energy_with(p, cur), std::pow(s, 2.0 * l) * e0, std::pow(mu2, 2.0 * l) * e0});
  }
  return rows;
}

std::string decay_csv(const std::vector<DecayRow>& rows) {
  std::string out = "layer,energy,s_bound,mu2_bound\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", r.layer, r.energy, r.s_bound, r.mu2_bound);
    out += buf;
  }
  return out;
}

}  // namespace graphopt
