// SPDX-License-Identifier: Apache-2.0
#include "graphopt/exact_spectrum.hpp"

#include <string>
#include <vector>

#include "graphopt/error.hpp"

namespace graphopt {

std::string_view to_string(EigenOrder order) {
  return order == EigenOrder::signed_order ? "signed" : "absolute";
}

EigenOrder parse_eigen_order(std::string_view name) {
  if (name == "signed") return EigenOrder::signed_order;
  if (name == "absolute") return EigenOrder::absolute;
  throw Error(Errc::InvalidArgument, "eigen order must be 'signed' or 'absolute', got '" + std::string(name) + "'");
}

IntPolynomial propagation_characteristic_polynomial(const Graph& g) {
  const int n = g.n();
  // Sample det(k D~ - A~) at k = 0..n; the polynomial has degree n.
  std::vector<mpz_class> samples;
  samples.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (Vertex v = 0; v < n; ++v) m[v][v] = static_cast<long>(k) * (g.degree(v) + 1) - 1;
    for (const Edge& e : g.edges()) {
      m[e.u][e.v] = -1;
      m[e.v][e.u] = -1;
    }
    samples.push_back(bareiss_determinant(std::move(m)));
  }
  return interpolate_at_naturals(samples);
}

int count_eigenvalues_above(const Graph& g, const Rational& x) {
  return count_roots_above(propagation_characteristic_polynomial(g), x);
}

bool exact_mu2_leq(const Graph& g, const RationalThreshold& tau, EigenOrder order, int exact_limit) {
  if (g.n() > exact_limit) {
    throw Error(Errc::ExactLimitExceeded, "exact eigenvalue test limited to n <= " + std::to_string(exact_limit) +
                                              ", got n = " + std::to_string(g.n()));
  }
  if (g.n() == 1) return true;
  const IntPolynomial p = propagation_characteristic_polynomial(g);
  if (order == EigenOrder::signed_order) {
    // mu1 = 1 is the largest eigenvalue, so mu2 <= tau iff at most one eigenvalue exceeds tau.
    return count_roots_above(p, tau) <= 1;
  }
  if (tau < Rational(0)) return false;
  return count_roots_above(p, tau) + count_roots_below(p, -tau) <= 1;
}

}  // namespace graphopt
