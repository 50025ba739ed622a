// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "graphopt/graph.hpp"
#include "graphopt/polynomial.hpp"
#include "graphopt/rational.hpp"

namespace graphopt {

/// Exact threshold on the second eigenvalue of the propagation matrix.
using RationalThreshold = Rational;

/// `signed_order`: second-largest eigenvalue. `absolute`: second-largest |eigenvalue|.
enum class EigenOrder { signed_order, absolute };

std::string_view to_string(EigenOrder order);
EigenOrder parse_eigen_order(std::string_view name);

/// det(x D~ - A~): integer polynomial whose roots, with multiplicity, are the eigenvalues of
/// D~^{-1} A~ (and of the cospectral propagation matrix). Leading coefficient det(D~) > 0.
IntPolynomial propagation_characteristic_polynomial(const Graph& g);

/// Number of eigenvalues of the propagation matrix strictly above `x`.
int count_eigenvalues_above(const Graph& g, const Rational& x);

/// Exact decision of mu2(P) <= tau. A single-vertex graph has no second eigenvalue and
/// the answer is vacuously true. Throws ExactLimitExceeded when n > exact_limit.
bool exact_mu2_leq(const Graph& g, const RationalThreshold& tau, EigenOrder order = EigenOrder::signed_order,
                   int exact_limit = 64);

}  // namespace graphopt
