// SPDX-License-Identifier: Apache-2.0
#include "graphopt/rewiring.hpp"

#include <omp.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "graphopt/error.hpp"
#include "graphopt/spectral.hpp"

namespace graphopt {

std::int64_t candidate_count(std::int64_t pairs, int k) {
  constexpr std::int64_t cap = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  __int128 term = 1;  // C(pairs, j)
  for (int j = 0; j <= k && j <= pairs; ++j) {
    if (j > 0) term = term * (pairs - j + 1) / j;
    if (term > cap || total > cap - term) return cap;
    total += static_cast<std::int64_t>(term);
  }
  return total;
}

bool meets_conductance(const Rational& phi, double threshold, const std::optional<Rational>& exact) {
  if (exact) return phi >= *exact;
  return phi.to_double() >= threshold;
}

namespace {

// All index combinations of size <= k from [0, pairs), by size then lexicographically.
std::vector<std::vector<int>> toggle_sets(int pairs, int k) {
  std::vector<std::vector<int>> out;
  out.emplace_back();
  for (int size = 1; size <= k && size <= pairs; ++size) {
    std::vector<int> c(size);
    for (int i = 0; i < size; ++i) c[i] = i;
    while (true) {
      out.push_back(c);
      int i = size - 1;
      while (i >= 0 && c[i] == pairs - size + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

EditSet edits_for(const Graph& g, const std::vector<Edge>& all, const std::vector<int>& idx) {
  std::vector<Edge> toggles;
  toggles.reserve(idx.size());
  for (int i : idx) toggles.push_back(all[i]);
  return EditSet::from_toggles(g, toggles);
}

std::vector<std::vector<int>> plan(const Graph& g, int k, const DecisionLimits& limits) {
  if (k < 0) throw Error(Errc::InvalidArgument, "edit budget must be non-negative");
  const std::int64_t pairs = static_cast<std::int64_t>(g.n()) * (g.n() - 1) / 2;
  const std::int64_t count = candidate_count(pairs, k);
  if (count > limits.max_candidates) {
    throw Error(Errc::SearchSpaceTooLarge, std::to_string(count) + " candidate edit sets exceed the cap of " +
                                               std::to_string(limits.max_candidates));
  }
  return toggle_sets(static_cast<int>(pairs), k);
}

}  // namespace

Decision decide_groc(const GrocInstance& inst, const DecisionLimits& limits) {
  const Graph& g = inst.graph;
  if (g.n() < 2) throw Error(Errc::InvalidArgument, "conductance needs at least two vertices");
  const bool in_range = inst.phi0_exact ? (*inst.phi0_exact >= Rational(0) && *inst.phi0_exact <= Rational(1))
                                        : (inst.phi0 >= 0.0 && inst.phi0 <= 1.0);
  if (!in_range) throw Error(Errc::InvalidArgument, "phi0 must lie in [0, 1]");
  if (g.n() > limits.conductance_limit) {
    throw Error(Errc::ExactLimitExceeded, "exact conductance limited to n <= " +
                                              std::to_string(limits.conductance_limit));
  }
  const auto sets = plan(g, inst.budget_k, limits);
  const auto all = all_pairs(g.n());
  const auto count = static_cast<std::int64_t>(sets.size());
  std::vector<Rational> phi(sets.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const Graph h = apply_edits(g, edits_for(g, all, sets[i]));
    phi[i] = conductance_exact(h, limits.conductance_limit).phi;
  }

  Decision d;
  d.objective = "conductance";
  d.candidates = count;
  Rational best = phi[0];
  for (std::int64_t i = 0; i < count; ++i) {
    if (phi[i] > best) best = phi[i];
    if (!d.answer && meets_conductance(phi[i], inst.phi0, inst.phi0_exact)) {
      d.answer = true;
      d.witness = edits_for(g, all, sets[i]);
    }
  }
  d.value_achieved = best.to_double();
  return d;
}

Decision decide_gros(const GrosInstance& inst, const DecisionLimits& limits) {
  const Graph& g = inst.graph;
  if (inst.tau < Rational(-1) || inst.tau > Rational(1)) throw Error(Errc::InvalidArgument, "tau must lie in [-1, 1]");
  if (g.n() > limits.sturm_limit) {
    throw Error(Errc::ExactLimitExceeded, "exact eigenvalue test limited to n <= " +
                                              std::to_string(limits.sturm_limit));
  }
  const auto sets = plan(g, inst.budget_k, limits);
  const auto all = all_pairs(g.n());
  const auto count = static_cast<std::int64_t>(sets.size());
  std::vector<char> pass(sets.size(), 0);
  std::vector<double> mu(sets.size(), std::numeric_limits<double>::quiet_NaN());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const Graph h = apply_edits(g, edits_for(g, all, sets[i]));
    pass[i] = exact_mu2_leq(h, inst.tau, inst.order, limits.sturm_limit) ? 1 : 0;
    if (h.n() >= 2) {
      const auto s = spectral_summary(h, true);
      mu[i] = inst.order == EigenOrder::signed_order ? s.mu2 : s.slack;
    }
  }

  Decision d;
  d.objective = "mu2";
  d.candidates = count;
  d.value_achieved = std::numeric_limits<double>::quiet_NaN();
  for (std::int64_t i = 0; i < count; ++i) {
    if (!std::isnan(mu[i]) && (std::isnan(d.value_achieved) || mu[i] < d.value_achieved)) d.value_achieved = mu[i];
    if (!d.answer && pass[i]) {
      d.answer = true;
      d.witness = edits_for(g, all, sets[i]);
    }
  }
  return d;
}

}  // namespace graphopt
