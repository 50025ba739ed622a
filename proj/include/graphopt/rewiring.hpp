// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "graphopt/cuts.hpp"
#include "graphopt/exact_spectrum.hpp"
#include "graphopt/graph.hpp"
#include "graphopt/rational.hpp"

namespace graphopt {

/// Can at most K edge toggles raise phi to >= phi0?
struct GrocInstance {
  Graph graph;
  int budget_k = 0;
  double phi0 = 0.0;
  std::optional<Rational> phi0_exact;  // compared exactly when present
};

/// Can at most K edge toggles bring mu2(P) down to <= tau?
struct GrosInstance {
  Graph graph;
  int budget_k = 0;
  Rational tau;
  EigenOrder order = EigenOrder::signed_order;
};

struct Decision {
  bool answer = false;
  std::optional<EditSet> witness;  // first qualifying edit set in enumeration order
  double value_achieved = 0.0;     // best phi (max) or mu2 (min) over every candidate; NaN if undefined
  std::string objective;           // "conductance" or "mu2"
  std::int64_t candidates = 0;
};

struct DecisionLimits {
  int conductance_limit = kDefaultConductanceLimit;
  int sturm_limit = 64;
  std::int64_t max_candidates = 200000;
};

/// Number of toggle sets of size <= k over `pairs` vertex pairs, saturating at INT64_MAX.
std::int64_t candidate_count(std::int64_t pairs, int k);

/// Exhaustive search over toggle sets, ordered by size and then lexicographically by pair index.
/// Throws SearchSpaceTooLarge or ExactLimitExceeded.
Decision decide_groc(const GrocInstance& inst, const DecisionLimits& limits = {});
Decision decide_gros(const GrosInstance& inst, const DecisionLimits& limits = {});

/// phi(G) >= threshold, exactly when `exact` is given.
bool meets_conductance(const Rational& phi, double threshold, const std::optional<Rational>& exact);

}  // namespace graphopt
