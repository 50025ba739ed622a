// SPDX-License-Identifier: Apache-2.0
#include "graphopt/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>

#include "graphopt/error.hpp"

namespace graphopt::kernels {

BitGraph::BitGraph(const Graph& g) : n(g.n()), adj(g.n(), 0), degree(g.n(), 0) {
  if (g.n() > 63) throw Error(Errc::ExactLimitExceeded, "bitset kernels support at most 63 vertices");
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    total_volume += degree[v];
  }
}

std::int64_t BitGraph::boundary(Mask s) const {
  std::int64_t b = 0;
  for (Mask rest = s; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    b += std::popcount(adj[v] & ~s);
  }
  return b;
}

std::int64_t BitGraph::volume(Mask s) const {
  std::int64_t vol = 0;
  for (Mask rest = s; rest; rest &= rest - 1) vol += degree[std::countr_zero(rest)];
  return vol;
}

bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  Mask diff = a ^ b;
  int first = std::countr_zero(diff);
  Mask bit = Mask{1} << first;
  // The set holding the first differing element is smaller unless the other set ends there.
  Mask holder = (a & bit) ? a : b;
  Mask other = (a & bit) ? b : a;
  bool other_is_prefix = (other >> first) == 0;
  bool a_smaller = other_is_prefix ? (other == a) : (holder == a);
  return a_smaller;
}

std::vector<Vertex> mask_to_vertices(Mask s) {
  std::vector<Vertex> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

Mask vertices_to_mask(const std::vector<Vertex>& vertices) {
  Mask s = 0;
  for (Vertex v : vertices) s |= Mask{1} << v;
  return s;
}

namespace {

// Strict total order: smaller ratio first, then lexicographically smaller witness.
bool better_cut(const CutScan& a, const CutScan& b) {
  if (!a.found) return false;
  if (!b.found) return true;
  __int128 lhs = static_cast<__int128>(a.boundary) * b.volume;
  __int128 rhs = static_cast<__int128>(b.boundary) * a.volume;
  if (lhs != rhs) return lhs < rhs;
  return lex_less(a.subset, b.subset);
}

void offer(CutScan& best, const BitGraph& g, Mask s, std::int64_t boundary, std::int64_t vol_s) {
  const std::int64_t vol_c = g.total_volume - vol_s;
  const std::int64_t small = std::min(vol_s, vol_c);
  if (small <= 0) return;
  Mask side = s;
  if (vol_c < vol_s || (vol_c == vol_s && lex_less(g.full() & ~s, s))) side = g.full() & ~s;
  CutScan cand{true, side, boundary, small};
  if (better_cut(cand, best)) best = cand;
}

}  // namespace

CutScan min_conductance_scan(const BitGraph& g) {
  CutScan best;
  if (g.n < 2) return best;
  // Vertex n-1 stays outside S; complements cover the rest.
  const std::uint64_t count = std::uint64_t{1} << (g.n - 1);
  const std::uint64_t chunk = std::max<std::uint64_t>(1024, count / 256);
  const std::int64_t chunks = static_cast<std::int64_t>((count + chunk - 1) / chunk);

#pragma omp parallel
  {
    CutScan local;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      std::uint64_t lo = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c) * chunk);
      std::uint64_t hi = std::min(count, static_cast<std::uint64_t>(c + 1) * chunk);
      if (lo >= hi) continue;
      Mask s = lo ^ (lo >> 1);
      std::int64_t boundary = g.boundary(s);
      std::int64_t vol = g.volume(s);
      offer(local, g, s, boundary, vol);
      for (std::uint64_t i = lo + 1; i < hi; ++i) {
        int v = std::countr_zero(i);
        Mask bit = Mask{1} << v;
        if (s & bit) {
          s &= ~bit;
          boundary -= g.degree[v] - 2 * std::popcount(g.adj[v] & s);
          vol -= g.degree[v];
        } else {
          boundary += g.degree[v] - 2 * std::popcount(g.adj[v] & s);
          s |= bit;
          vol += g.degree[v];
        }
        offer(local, g, s, boundary, vol);
      }
    }
#pragma omp critical(graphopt_cut_merge)
    {
      if (better_cut(local, best)) best = local;
    }
  }
  return best;
}

CutScan min_conductance_scan_serial(const Graph& g) {
  CutScan best;
  const int n = g.n();
  if (n < 2) return best;
  std::int64_t total = 2 * static_cast<std::int64_t>(g.m());
  std::vector<char> in(n);
  for (Mask s = 1; s + 1 < (Mask{1} << n); ++s) {
    std::int64_t vol = 0;
    for (int v = 0; v < n; ++v) {
      in[v] = (s >> v) & 1;
      if (in[v]) vol += g.degree(v);
    }
    if (vol <= 0 || 2 * vol > total) continue;
    std::int64_t boundary = 0;
    for (const Edge& e : g.edges())
      if (in[e.u] != in[e.v]) ++boundary;
    CutScan cand{true, s, boundary, vol};
    if (better_cut(cand, best)) best = cand;
  }
  return best;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

// rank-th k-subset of {0..} in colex order, equivalently the rank-th smallest mask with popcount k.
Mask colex_unrank(std::uint64_t rank, int k) {
  Mask s = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    s |= Mask{1} << c;
    rank -= binomial(c, i);
  }
  return s;
}

Mask next_same_popcount(Mask x) {
  Mask c = x & (~x + 1);
  Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

bool better_bisection(std::int64_t w, Mask s, const BisectionScan& best, bool have) {
  if (!have) return true;
  if (w != best.width) return w < best.width;
  return lex_less(s, best.subset);
}

}  // namespace

BisectionScan min_bisection_scan(const BitGraph& g) {
  if (g.n % 2 != 0 || g.n < 2) throw Error(Errc::OddVertexCount, "bisection needs an even vertex count");
  const int k = g.n / 2 - 1;  // members besides vertex 0, drawn from vertices 1..n-1
  const std::uint64_t total = binomial(g.n - 1, k);
  const std::uint64_t chunk = std::max<std::uint64_t>(512, total / 256);
  const std::int64_t chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  BisectionScan best;
  bool have = false;

#pragma omp parallel
  {
    BisectionScan local;
    bool local_have = false;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
      std::uint64_t hi = std::min(total, lo + chunk);
      Mask rest = colex_unrank(lo, k);
      for (std::uint64_t r = lo; r < hi; ++r) {
        Mask s = (rest << 1) | 1;
        std::int64_t w = g.boundary(s);
        if (better_bisection(w, s, local, local_have)) {
          local = {s, w};
          local_have = true;
        }
        if (k > 0 && r + 1 < hi) rest = next_same_popcount(rest);
      }
    }
#pragma omp critical(graphopt_bisection_merge)
    {
      if (local_have && better_bisection(local.width, local.subset, best, have)) {
        best = local;
        have = true;
      }
    }
  }
  return best;
}

BisectionScan min_bisection_scan_serial(const Graph& g) {
  const int n = g.n();
  if (n % 2 != 0 || n < 2) throw Error(Errc::OddVertexCount, "bisection needs an even vertex count");
  BisectionScan best;
  bool have = false;
  std::vector<char> in(n, 0);
  in[0] = 1;
  auto visit = [&](auto&& self, int next, int need) -> void {
    if (need == 0) {
      std::int64_t w = 0;
      for (const Edge& e : g.edges())
        if (in[e.u] != in[e.v]) ++w;
      Mask s = 0;
      for (int v = 0; v < n; ++v)
        if (in[v]) s |= Mask{1} << v;
      if (better_bisection(w, s, best, have)) {
        best = {s, w};
        have = true;
      }
      return;
    }
    for (int v = next; v <= n - need; ++v) {
      in[v] = 1;
      self(self, v + 1, need - 1);
      in[v] = 0;
    }
  };
  visit(visit, 1, n / 2 - 1);
  return best;
}

std::optional<Mask> bisection_within(const BitGraph& g, std::int64_t budget) {
  if (g.n % 2 != 0 || g.n < 2) throw Error(Errc::OddVertexCount, "bisection needs an even vertex count");
  if (budget < 0) return std::nullopt;
  const int n = g.n;
  const int half = n / 2;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree[a] > g.degree[b]; });

  Mask side[2] = {0, 0};
  std::optional<Mask> found;
  auto bound = [&](Mask assigned) {
    std::int64_t lb = 0;
    for (Mask rest = g.full() & ~assigned; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      lb += std::min(std::popcount(g.adj[u] & side[0]), std::popcount(g.adj[u] & side[1]));
    }
    return lb;
  };
  auto dfs = [&](auto&& self, int depth, std::int64_t cut) -> bool {
    if (depth == n) {
      found = side[0];
      return true;
    }
    const int v = order[depth];
    const Mask bit = Mask{1} << v;
    for (int s = 0; s < 2; ++s) {
      if (depth == 0 && s == 1) break;  // complement symmetry
      if (std::popcount(side[s]) >= half) continue;
      const std::int64_t add = std::popcount(g.adj[v] & side[1 - s]);
      if (cut + add > budget) continue;
      side[s] |= bit;
      if (cut + add + bound(side[0] | side[1]) <= budget && self(self, depth + 1, cut + add)) return true;
      side[s] &= ~bit;
    }
    return false;
  };
  dfs(dfs, 0, 0);
  if (found && !(*found & 1)) *found = g.full() & ~*found;
  return found;
}

}  // namespace graphopt::kernels
