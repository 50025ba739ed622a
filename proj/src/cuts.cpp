// SPDX-License-Identifier: Apache-2.0
#include "graphopt/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphopt/error.hpp"
#include "graphopt/kernels.hpp"

namespace graphopt {

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.n()) throw Error(Errc::OutOfRangeVertex, "vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

std::int64_t crossing_edges(const Graph& g, const std::vector<char>& in_s) {
  std::int64_t b = 0;
  for (const Edge& e : g.edges())
    if (in_s[e.u] != in_s[e.v]) ++b;
  return b;
}

Cut conductance_of(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g, s);
  const auto size = std::count(in.begin(), in.end(), 1);
  if (size == 0 || size == g.n()) throw Error(Errc::EmptySide, "cut side is empty");
  Cut cut;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in[v]) {
      cut.subset.push_back(v);
      cut.vol_s += g.degree(v);
    } else {
      cut.vol_complement += g.degree(v);
    }
  }
  cut.boundary_size = crossing_edges(g, in);
  const std::int64_t small = std::min(cut.vol_s, cut.vol_complement);
  if (small == 0) throw Error(Errc::ZeroVolumeSide, "cut side has zero volume");
  cut.phi = Rational(cut.boundary_size, small);
  return cut;
}

Cut conductance_exact(const Graph& g, int exact_limit) {
  if (g.n() < 2) throw Error(Errc::InvalidArgument, "conductance needs at least two vertices");
  // Disconnected (isolated vertices included): phi is 0, witnessed by the lightest component.
  auto labels = g.component_labels();
  const int count = *std::max_element(labels.begin(), labels.end()) + 1;
  if (count >= 2) {
    std::vector<std::int64_t> vol(count, 0);
    for (Vertex v = 0; v < g.n(); ++v) vol[labels[v]] += g.degree(v);
    // Labels follow first appearance, so the lowest label breaks volume ties lexicographically.
    const int lightest = static_cast<int>(std::min_element(vol.begin(), vol.end()) - vol.begin());
    Cut c;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (labels[v] == lightest) {
        c.subset.push_back(v);
        c.vol_s += g.degree(v);
      } else {
        c.vol_complement += g.degree(v);
      }
    }
    c.phi = Rational(0);
    return c;
  }

  if (g.n() > exact_limit) {
    throw Error(Errc::ExactLimitExceeded, "exact conductance limited to n <= " + std::to_string(exact_limit) +
                                              ", got n = " + std::to_string(g.n()));
  }
  const kernels::BitGraph bits(g);
  const auto scan = kernels::min_conductance_scan(bits);
  return conductance_of(g, kernels::mask_to_vertices(scan.subset));
}

CheegerInterval cheeger_interval(double lambda2) {
  const double l = std::max(0.0, lambda2);
  return {l / 2.0, std::sqrt(2.0 * l)};
}

CheegerInterval cheeger_interval(const SpectralSummary& summary) { return cheeger_interval(summary.lambda2); }

BisectionResult min_bisection_exact(const Graph& h, std::optional<std::int64_t> budget_b, int exact_limit) {
  if (h.n() % 2 != 0) throw Error(Errc::OddVertexCount, "bisection needs an even vertex count, got " + std::to_string(h.n()));
  if (h.n() > exact_limit) {
    throw Error(Errc::ExactLimitExceeded, "exact bisection limited to n <= " + std::to_string(exact_limit) +
                                              ", got n = " + std::to_string(h.n()));
  }
  const kernels::BitGraph bits(h);
  const auto scan = kernels::min_bisection_scan(bits);
  BisectionResult out;
  out.width = scan.width;
  out.partition = kernels::mask_to_vertices(scan.subset);
  if (budget_b) out.within_budget = out.width <= *budget_b;
  return out;
}

std::optional<std::vector<Vertex>> bisection_within(const Graph& h, std::int64_t b) {
  if (h.n() % 2 != 0) throw Error(Errc::OddVertexCount, "bisection needs an even vertex count, got " + std::to_string(h.n()));
  const kernels::BitGraph bits(h);
  auto side = kernels::bisection_within(bits, b);
  if (!side) return std::nullopt;
  return kernels::mask_to_vertices(*side);
}

BalancedCut balance_cut(const Graph& h, std::span<const Vertex> s) {
  const int n = h.n();
  if (n % 2 != 0) throw Error(Errc::OddVertexCount, "balancing needs an even vertex count");
  auto in = membership(h, s);
  int size = static_cast<int>(std::count(in.begin(), in.end(), 1));
  if (size == 0 || size == n) throw Error(Errc::EmptySide, "cut side is empty");

  BalancedCut out;
  out.initial_boundary = crossing_edges(h, in);
  while (size != n / 2) {
    const char larger = size > n / 2 ? 1 : 0;
    Vertex pick = -1;
    int best = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (in[v] != larger) continue;
      int same = 0;
      for (Vertex u : h.neighbors(v)) same += in[u] == larger ? 1 : 0;
      int delta = same - (h.degree(v) - same);
      if (pick < 0 || delta < best) {
        pick = v;
        best = delta;
      }
    }
    in[pick] = static_cast<char>(1 - larger);
    size += larger ? -1 : 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) out.subset.push_back(v);
  out.final_boundary = crossing_edges(h, in);
  out.factor = static_cast<double>(out.final_boundary) / static_cast<double>(std::max<std::int64_t>(1, out.initial_boundary));
  return out;
}

}  // namespace graphopt
