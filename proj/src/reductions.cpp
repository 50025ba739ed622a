// SPDX-License-Identifier: Apache-2.0
#include "graphopt/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "graphopt/error.hpp"
#include "graphopt/generators.hpp"
#include "graphopt/kernels.hpp"
#include "graphopt/spectral.hpp"

namespace graphopt {

void validate_instance(const BisectionInstance& inst) {
  if (inst.h.n() % 2 != 0) {
    throw Error(Errc::OddVertexCount, "bisection instance needs an even vertex count, got " + std::to_string(inst.h.n()));
  }
  if (inst.b < 0) throw Error(Errc::InvalidArgument, "bisection budget must be non-negative");
}

// ---- scaling -------------------------------------------------------------------------

namespace {

bool in_target(std::int64_t n, std::int64_t b, ScalingTarget target) {
  if (target == ScalingTarget::large) return b >= 2 * n;
  return n <= 2 * b && b <= 2 * n;
}

// Moving p vertices of one clique and q of the other across costs at least
// f(p) + f(q) beyond the r * M baseline, f(x) = x (M - x - r).
bool rigid(int n, std::int64_t b, int m, int r) {
  auto f = [&](std::int64_t x) { return x * (m - x - r); };
  for (int p = 0; p <= m; ++p)
    for (int q = 0; p + q <= m; ++q) {
      if ((p == 0 && q == 0) || std::abs(q - p) > n / 2) continue;
      if (f(p) + f(q) <= b) return false;
    }
  return true;
}

}  // namespace

ScalingGadget plan_scaling(int n, std::int64_t b, ScalingTarget target) {
  for (int m = 1; m <= 4096; ++m)
    for (int r = 0; r <= m; ++r) {
      const std::int64_t n2 = n + 2 * static_cast<std::int64_t>(m);
      const std::int64_t b2 = b + static_cast<std::int64_t>(r) * m;
      if (in_target(n2, b2, target) && rigid(n, b, m, r)) return {m, r};
    }
  throw Error(Errc::InfeasibleParameters, "no scaling gadget found");
}

BisectionInstance apply_scaling(const BisectionInstance& inst, const ScalingGadget& gadget) {
  const int n = inst.h.n();
  const int m = gadget.clique;
  std::vector<Edge> edges = inst.h.edges();
  const int a0 = n, b0 = n + m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      edges.emplace_back(a0 + i, a0 + j);
      edges.emplace_back(b0 + i, b0 + j);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < gadget.r; ++j) edges.emplace_back(a0 + i, b0 + (i + j) % m);
  return {Graph(n + 2 * m, edges), inst.b + static_cast<std::int64_t>(gadget.r) * m};
}

BisectionInstance scale_instance_large(const BisectionInstance& inst) {
  validate_instance(inst);
  const int n = inst.h.n();
  if (in_target(n, inst.b, ScalingTarget::large)) return inst;
  const BisectionInstance clamped{inst.h, std::min<std::int64_t>(inst.b, inst.h.m())};
  return apply_scaling(clamped, plan_scaling(n, clamped.b, ScalingTarget::large));
}

BisectionInstance scale_instance_between(const BisectionInstance& inst) {
  validate_instance(inst);
  const int n = inst.h.n();
  if (in_target(n, inst.b, ScalingTarget::between)) return inst;
  // Every bisection crosses at most m edges, so any budget above m can drop to m.
  const BisectionInstance clamped{inst.h, std::min<std::int64_t>(inst.b, inst.h.m())};
  if (in_target(n, clamped.b, ScalingTarget::between)) return clamped;
  return apply_scaling(clamped, plan_scaling(n, clamped.b, ScalingTarget::between));
}

// ---- expander embedding --------------------------------------------------------------

CertifiedExpander build_certified_expander(int n, double lambda2_floor, std::uint64_t seed, int max_retries) {
  if (n < 4 || n % 2 != 0) {
    throw Error(Errc::InfeasibleParameters, "a 3-regular expander needs an even n >= 4, got " + std::to_string(n));
  }
  std::mt19937_64 seeds(seed);
  CertifiedExpander best;
  best.lambda2 = -1.0;
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    Graph g = random_regular_graph(n, 3, seeds());
    const double l2 = fiedler_value(g);
    if (l2 > best.lambda2) best = {g, l2, attempt};
    if (l2 >= lambda2_floor) return {std::move(g), l2, attempt};
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "no 3-regular graph on %d vertices reached lambda2 >= %.6g in %d attempts (best %.6g)",
                n, lambda2_floor, max_retries, best.lambda2);
  throw Error(Errc::CertificationFailure, buf);
}

namespace {

// Simple graph on `deg.size()` vertices with the given degrees, or nullopt.
std::optional<std::vector<Edge>> random_completion(const std::vector<int>& deg, std::mt19937_64& rng, int tries) {
  std::vector<int> stubs;
  for (int v = 0; v < static_cast<int>(deg.size()); ++v)
    for (int k = 0; k < deg[v]; ++k) stubs.push_back(v);
  for (int t = 0; t < tries; ++t) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        ok = false;
        break;
      }
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return edges;
  }
  return std::nullopt;
}

std::optional<std::vector<Edge>> havel_hakimi(std::vector<int> deg) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(deg.size());
  while (true) {
    int v = 0;
    for (int i = 1; i < n; ++i)
      if (deg[i] > deg[v]) v = i;
    if (deg[v] == 0) return edges;
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
      if (i != v && deg[i] > 0) others.push_back(i);
    if (static_cast<int>(others.size()) < deg[v]) return std::nullopt;
    std::stable_sort(others.begin(), others.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    for (int k = 0; k < deg[v]; ++k) {
      --deg[others[k]];
      edges.emplace_back(v, others[k]);
    }
    deg[v] = 0;
  }
}

}  // namespace

ExpanderEmbedding embed_instance(const Graph& h, const EmbeddingParams& params) {
  const int n = h.n();
  if (n % 2 != 0) throw Error(Errc::OddVertexCount, "embedding needs an even vertex count");
  if (n < 4) throw Error(Errc::InvalidArgument, "embedding needs at least four vertices");
  if (h.max_degree() > 3) {
    throw Error(Errc::DegreeTooHigh, "maximum degree " + std::to_string(h.max_degree()) +
                                         " cannot be induced in a 3-regular graph");
  }

  std::vector<Edge> base = h.edges();
  std::vector<int> load(n, 0);
  int cursor = 0;
  for (Vertex v = 0; v < n; ++v)
    for (int k = 0; k < 3 - h.degree(v); ++k) {
      const int u = cursor++ % n;
      base.emplace_back(v, n + u);
      ++load[u];
    }
  std::vector<int> residual(n);
  for (int u = 0; u < n; ++u) residual[u] = 3 - load[u];

  std::mt19937_64 rng(params.seed);
  std::vector<Vertex> pads(n);
  for (int u = 0; u < n; ++u) pads[u] = n + u;
  double best = -1.0;
  for (int attempt = 1; attempt <= params.max_retries; ++attempt) {
    auto inner = random_completion(residual, rng, 200);
    if (!inner) inner = havel_hakimi(residual);
    if (!inner) throw Error(Errc::PadCompletionFailure, "pad degree demand is not graphical");
    std::vector<Edge> edges = base;
    for (const Edge& e : *inner) edges.emplace_back(n + e.u, n + e.v);
    Graph g(2 * n, edges);
    for (Vertex v = 0; v < 2 * n; ++v)
      if (g.degree(v) != 3) throw Error(Errc::PadCompletionFailure, "completion is not 3-regular");
    const double l2 = fiedler_value(g.induced(pads));
    best = std::max(best, l2);
    if (l2 >= params.pad_floor) {
      ExpanderEmbedding emb;
      emb.g = std::move(g);
      for (Vertex v = 0; v < n; ++v) emb.original_vertices.push_back(v);
      emb.pad_vertices = pads;
      emb.certified_lambda2 = l2;
      emb.attempts = attempt;
      return emb;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "pad subgraph never reached lambda2 >= %.6g in %d attempts (best %.6g)",
                params.pad_floor, params.max_retries, best);
  throw Error(Errc::CertificationFailure, buf);
}

// ---- constants -----------------------------------------------------------------------

std::string_view to_string(ReductionProblem problem) { return problem == ReductionProblem::groc ? "groc" : "gros"; }

ReductionProblem parse_reduction_problem(std::string_view name) {
  if (name == "groc") return ReductionProblem::groc;
  if (name == "gros") return ReductionProblem::gros;
  throw Error(Errc::InvalidArgument, "problem must be 'groc' or 'gros', got '" + std::string(name) + "'");
}

void validate_constants(const ReductionConstants& c, ReductionProblem problem) {
  auto fail = [](const std::string& what) { throw Error(Errc::ConstantConditionViolated, what); };
  if (c.c1 <= Rational(0) || c.c2 <= Rational(0) || c.c3 <= Rational(0)) fail("constants must be positive");
  if (problem == ReductionProblem::groc) {
    if (!(c.c1 < Rational(1, 6))) fail("c1 = " + c.c1.str() + " violates c1 < 1/6");
    if (!(c.c2 * c.c3 < Rational(1, 2))) fail("c2 c3 = " + (c.c2 * c.c3).str() + " violates c2 c3 < 1/2");
    if (!(c.c3 < Rational(1))) fail("c3 = " + c.c3.str() + " violates c3 < 1");
  } else {
    if (!(c.c1 < Rational(1, 48))) fail("c1 = " + c.c1.str() + " violates c1 < 1/48");
    if (!(2.0 * c.c2.to_double() * std::sqrt(3.0 * c.c1.to_double()) < 0.5)) {
      fail("2 c2 sqrt(3 c1) >= 1/2 for c1 = " + c.c1.str() + ", c2 = " + c.c2.str());
    }
  }
  if (c.epsilon && *c.epsilon < Rational(0)) fail("epsilon must be non-negative");
}

MeasuredConstants measure_constants(const ExpanderEmbedding& emb, const Graph& h, int limit) {
  const int n = h.n();
  if (n > limit) {
    throw Error(Errc::ExactLimitExceeded, "constant measurement limited to n <= " + std::to_string(limit) +
                                              ", got n = " + std::to_string(n));
  }
  if (emb.g.n() != 2 * n) throw Error(Errc::DimensionMismatch, "embedding does not match the instance");
  using kernels::Mask;
  const kernels::BitGraph g(emb.g);
  const kernels::BitGraph hb(h);
  const Mask vmask = (Mask{1} << n) - 1;
  const Mask umask = g.full() & ~vmask;

  MeasuredConstants out;
  out.c1_hat = Rational(0);
  for (Mask s = 0; s <= vmask; ++s) {
    if (2 * std::popcount(s) > n) continue;
    const Mask x = s | umask;
    const std::int64_t b = g.boundary(x);
    const std::int64_t vol = g.volume(x);
    const std::int64_t small = std::min(vol, g.total_volume - vol);
    const Rational value(b * n, small * (hb.boundary(s) + n));
    if (value > out.c1_hat) out.c1_hat = value;
  }

  Rational c2(0);
  bool unbounded = false;
  for (Mask x = 1; x < g.full(); ++x) {
    const std::int64_t delta = hb.boundary(x & vmask);
    if (delta == 0) continue;
    const std::int64_t b = g.boundary(x);
    if (b == 0) {
      unbounded = true;
      break;
    }
    const std::int64_t vol = g.volume(x);
    const std::int64_t small = std::min(vol, g.total_volume - vol);
    const Rational value(delta * small, b * n);
    if (value > c2) c2 = value;
  }
  if (!unbounded) out.c2_hat = c2;

  out.c3_hat = Rational(0);
  for (Mask s = 1; s < vmask; ++s) {
    const auto bal = balance_cut(h, kernels::mask_to_vertices(s));
    const Rational factor(bal.final_boundary, std::max<std::int64_t>(1, bal.initial_boundary));
    if (factor > out.c3_hat) out.c3_hat = factor;
  }
  return out;
}

// ---- reductions ----------------------------------------------------------------------

GrocInstance ReductionSkeleton::groc() const {
  return {embedding.g, budget_k, threshold.to_double(), threshold};
}

GrosInstance ReductionSkeleton::gros() const { return {embedding.g, budget_k, threshold, EigenOrder::signed_order}; }

ReductionSkeleton reduce_to_groc(const BisectionInstance& inst, const ReductionConstants& consts,
                                 const EmbeddingParams& params) {
  validate_instance(inst);
  validate_constants(consts, ReductionProblem::groc);
  ReductionSkeleton s;
  s.problem = ReductionProblem::groc;
  s.instance = inst;
  s.constants = consts;
  s.params = params;
  s.embedding = embed_instance(inst.h, params);
  const std::int64_t n = inst.h.n();
  s.threshold = Rational(1) - consts.c1 * Rational(inst.b + n, n);
  s.epsilon = Rational(0);
  s.window_ok = n <= 2 * inst.b && inst.b <= 2 * n;
  return s;
}

ReductionSkeleton reduce_to_gros(const BisectionInstance& inst, const ReductionConstants& consts,
                                 const EmbeddingParams& params) {
  validate_instance(inst);
  validate_constants(consts, ReductionProblem::gros);
  const std::int64_t n = inst.h.n();
  const Rational base = Rational(1) - Rational(2) * consts.c1 * Rational(inst.b + n, n);
  Rational eps = min(base / Rational(2), consts.c1 * Rational(inst.b, n));
  if (consts.epsilon) eps = min(eps, *consts.epsilon);
  if (eps < Rational(0)) {
    throw Error(Errc::ConstantConditionViolated, "1 - 2 c1 (B + n) / n = " + base.str() + " leaves no room for epsilon");
  }
  ReductionSkeleton s;
  s.problem = ReductionProblem::gros;
  s.instance = inst;
  s.constants = consts;
  s.params = params;
  s.embedding = embed_instance(inst.h, params);
  s.epsilon = eps;
  s.threshold = base - eps;
  s.window_ok = inst.b >= 2 * n;
  return s;
}

namespace {

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

bool ReductionCertificate::all_asserted_pass() const {
  if (!forward.asserted || !reverse.asserted) return false;
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second != "fail"; });
}

ReductionCertificate verify_reduction(const ReductionSkeleton& skeleton, int limit) {
  const Graph& h = skeleton.instance.h;
  const Graph& g = skeleton.embedding.g;
  const std::int64_t n = h.n();
  const std::int64_t b = skeleton.instance.b;
  if (n > limit) {
    throw Error(Errc::ExactLimitExceeded, "reduction verification limited to n <= " + std::to_string(limit) +
                                              ", got n = " + std::to_string(n));
  }
  const auto& c = skeleton.constants;

  ReductionCertificate cert;
  cert.skeleton = skeleton;
  cert.bisection_truth = min_bisection_exact(h, b, std::max(limit, kDefaultBisectionLimit));
  cert.bisection_yes = cert.bisection_truth.width <= b;
  cert.measured = measure_constants(skeleton.embedding, h, limit);
  const auto& m = cert.measured;

  // Structural identities of the construction.
  bool regular = g.n() == 2 * n;
  for (Vertex v = 0; v < g.n(); ++v) regular = regular && g.degree(v) == 3;
  cert.checks["embedding_3_regular"] = verdict(regular);
  cert.checks["embedding_induces_h"] = verdict(g.induced(skeleton.embedding.original_vertices) == h);

  const Rational load = c.c1 * Rational(b + n, n);  // c1 (B + n) / n
  std::vector<Vertex> s_union_u;
  if (cert.bisection_yes) {
    s_union_u = cert.bisection_truth.partition;
    s_union_u.insert(s_union_u.end(), skeleton.embedding.pad_vertices.begin(), skeleton.embedding.pad_vertices.end());
  }
  const Cut best_cut = conductance_exact(g, std::max(2 * limit, kDefaultConductanceLimit));
  const Rational phi_g = best_cut.phi;
  const auto nonaug = spectral_summary(g, false);
  const auto aug = spectral_summary(g, true);

  auto& fw = cert.forward;
  auto& rv = cert.reverse;
  fw.applicable = cert.bisection_yes;
  rv.applicable = !cert.bisection_yes;

  // Shared forward terms: the witness bisection S and the cut S u U.
  Rational phi_x;
  if (fw.applicable) {
    phi_x = conductance_of(g, s_union_u).phi;
    const Rational delta_s(cert.bisection_truth.width);
    const Rational measured_bound = m.c1_hat * (delta_s + Rational(n)) / Rational(n);
    const Rational measured_bound_b = m.c1_hat * Rational(b + n, n);
    fw.terms["delta_h_s"] = delta_s.str();
    fw.terms["phi_g_s_union_u"] = phi_x.str();
    fw.terms["c1_hat_bound"] = measured_bound.str();
    fw.terms["c1_hat_bound_b"] = measured_bound_b.str();
    fw.terms["c1_bound"] = load.str();
    fw.asserted = phi_x <= measured_bound && phi_x <= measured_bound_b;
    fw.terms["configured_bound_holds"] = verdict(phi_x <= load);
  }

  // Shared reverse terms: cut extraction from the best cut of G, then balancing.
  if (rv.applicable) {
    std::vector<Vertex> s;
    for (Vertex v : best_cut.subset)
      if (v < n) s.push_back(v);
    std::vector<char> in(n, 0);
    for (Vertex v : s) in[v] = 1;
    const std::int64_t delta_s = crossing_edges(h, in);
    rv.terms["extracted_size"] = std::to_string(s.size());
    rv.terms["delta_h_extracted"] = std::to_string(delta_s);
    rv.terms["c2_bound"] = (c.c2 * phi_g * Rational(n)).str();
    if (m.c2_hat) {
      const Rational bound = *m.c2_hat * phi_g * Rational(n);
      rv.terms["c2_hat_bound"] = bound.str();
      rv.asserted = Rational(delta_s) <= bound || delta_s == 0;
    } else {
      rv.terms["c2_hat_bound"] = "unbounded";
    }
    if (!s.empty() && static_cast<std::int64_t>(s.size()) < n) {
      const auto bal = balance_cut(h, s);
      rv.terms["balanced_width"] = std::to_string(bal.final_boundary);
      rv.terms["c3_c2_bound"] = (c.c3 * c.c2 * phi_g * Rational(n)).str();
      rv.asserted = rv.asserted && bal.final_boundary >= cert.bisection_truth.width;
    }
    rv.terms["budget_b"] = std::to_string(b);
  }

  if (skeleton.problem == ReductionProblem::groc) {
    const Rational& phi0 = skeleton.threshold;
    cert.graph_value = phi_g.to_double();
    cert.graph_value_exact = phi_g;
    cert.target_answer = phi_g >= phi0;
    cert.checks["threshold_formula"] = verdict(phi0 == Rational(1) - load);
    if (c.c1 < Rational(1, 6) && b <= 2 * n) {
      cert.checks["phi0_above_half"] = verdict(phi0 > Rational(1, 2) && phi0 >= Rational(1) - Rational(3) * c.c1);
    } else {
      cert.checks["phi0_above_half"] = "n/a";
    }
    for (auto* d : {&fw, &rv}) {
      d->terms["phi_g"] = phi_g.str();
      d->terms["phi0"] = phi0.str();
    }
    if (fw.applicable) {
      fw.terms["one_minus_phi0"] = (Rational(1) - phi0).str();
      fw.holds = phi_g < phi0;
    }
    if (rv.applicable) rv.holds = phi_g >= phi0;
  } else {
    const Rational& tau = skeleton.threshold;
    const Rational base = Rational(1) - Rational(2) * load;
    cert.graph_value = aug.mu2;
    cert.target_answer = exact_mu2_leq(g, tau, EigenOrder::signed_order);
    cert.checks["threshold_formula"] = verdict(tau == base - skeleton.epsilon);
    cert.checks["epsilon_caps"] =
        verdict(skeleton.epsilon <= base / Rational(2) && skeleton.epsilon <= c.c1 * Rational(b, n) &&
                skeleton.epsilon >= Rational(0));
    for (auto* d : {&fw, &rv}) {
      d->terms["tau"] = tau.str();
      d->terms["mu2"] = real(aug.mu2);
      d->terms["lambda2"] = real(nonaug.lambda2);
      d->terms["mu2_nonaugmented"] = real(nonaug.mu2);
    }
    if (fw.applicable) {
      fw.terms["two_phi_g_s_union_u"] = (Rational(2) * phi_x).str();
      fw.terms["one_minus_2c1_load"] = base.str();
      // Cheeger: lambda2 <= 2 phi(G) <= 2 phi(S u U).
      fw.asserted = fw.asserted && nonaug.lambda2 <= 2.0 * phi_x.to_double() + 1e-9;
      fw.holds = !cert.target_answer;
    }
    if (rv.applicable) {
      const Rational delta = Rational(2) * load + skeleton.epsilon;
      rv.terms["delta"] = delta.str();
      rv.terms["sqrt_2delta"] = real(std::sqrt(2.0 * delta.to_double()));
      rv.terms["phi_g"] = phi_g.str();
      rv.terms["cheeger_upper"] = real(std::sqrt(2.0 * std::max(0.0, nonaug.lambda2)));
      rv.asserted = rv.asserted && phi_g.to_double() <= std::sqrt(2.0 * std::max(0.0, nonaug.lambda2)) + 1e-9;
      rv.holds = cert.target_answer;
    }
  }
  cert.implied_bisection = skeleton.inverted ? !cert.target_answer : cert.target_answer;
  cert.agreement = cert.implied_bisection == cert.bisection_yes;
  return cert;
}

}  // namespace graphopt
