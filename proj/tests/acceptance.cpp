// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphopt/certificate.hpp"
#include "graphopt/cuts.hpp"
#include "graphopt/exact_spectrum.hpp"
#include "graphopt/generators.hpp"
#include "graphopt/heuristics.hpp"
#include "graphopt/reductions.hpp"
#include "graphopt/rewiring.hpp"
#include "graphopt/spectral.hpp"
#include "oracles.hpp"

using namespace graphopt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Rational to_rational(const oracle::Ratio& r) { return Rational(r.num, r.den); }

std::int64_t crossing(const Graph& g, const std::vector<char>& in) {
  std::int64_t c = 0;
  for (const Edge& e : g.edges()) c += in[e.u] != in[e.v];
  return c;
}

// phi(S) from raw counts.
Rational phi_of(const Graph& g, const std::vector<char>& in) {
  const auto d = oracle::degrees(g);
  std::int64_t vs = 0, vc = 0;
  for (int v = 0; v < g.n(); ++v) (in[v] ? vs : vc) += d[v];
  return Rational(crossing(g, in), std::min(vs, vc));
}

Graph random_subcubic(std::mt19937_64& rng, int n) {
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  auto pairs = all_pairs(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const std::size_t want = 1 + rng() % (3 * n / 2);
  for (const Edge& e : pairs) {
    if (edges.size() >= want) break;
    if (deg[e.u] < 3 && deg[e.v] < 3) {
      edges.push_back(e);
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  return Graph(n, edges);
}

// All labelled graphs on 4 vertices plus random subcubic graphs on 6 and 8 vertices.
std::vector<Graph> reduction_corpus() {
  std::vector<Graph> out;
  const auto pairs = all_pairs(4);
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    out.emplace_back(4, edges);
  }
  std::mt19937_64 rng(606);
  for (int i = 0; i < 24; ++i) out.push_back(random_subcubic(rng, 6));
  for (int i = 0; i < 24; ++i) out.push_back(random_subcubic(rng, 8));
  return out;
}

// Independent enumeration of c1_hat = max over |S| <= n/2 of phi_G(S u U) n / (|d_H(S)| + n).
Rational c1_hat_oracle(const ExpanderEmbedding& e, const Graph& h) {
  const int n = h.n();
  Rational best(0);
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) > n / 2) continue;
    std::vector<char> in(2 * n, 1), in_h(n, 0);
    for (int v = 0; v < n; ++v) in[v] = in_h[v] = (s >> v) & 1;
    best = std::max(best, phi_of(e.g, in) * Rational(n, crossing(h, in_h) + n));
  }
  return best;
}

std::string real_text(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string secs_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---------------------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  std::mt19937_64 rng(101);
  const auto t0 = Clock::now();
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_connected(rng, 4, 12, i % 2 == 1);
    const double phi = conductance_exact(g).phi_value();
    const double l2 = spectral_summary(g, false).lambda2;
    if (!(phi * phi / 2 <= l2 + 1e-9 && l2 <= 2 * phi + 1e-9)) {
      o.fail("graph " + std::to_string(i) + ": phi=" + real_text(phi) + " lambda2=" + real_text(l2));
    }
  }
  const double t = seconds_since(t0);
  if (t >= 60.0) o.fail("took " + secs_text(t) + " s");
  if (o.pass) o.detail = "200 graphs in " + secs_text(t) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::mt19937_64 rng(202);
  int done = 0;
  double worst = 0.0;
  while (done < 50) {
    const int d = 3 + done % 2;
    const int n = d == 3 ? 2 * (3 + static_cast<int>(rng() % 6)) : 5 + static_cast<int>(rng() % 12);
    Graph g = random_regular_graph(n, d, rng());
    if (!oracle::connected(g)) continue;
    SpectralSummary s = spectral_summary(g, false);
    worst = std::max(worst, std::abs(s.mu2 - (1.0 - s.lambda2)));
    ++done;
  }
  if (worst > 1e-9) o.fail("max deviation " + real_text(worst));
  else o.detail = "50 graphs, max deviation " + real_text(worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(303);
  int done = 0, disagree = 0;
  while (done < 500) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g = gnp_graph(n, 0.25 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng());
    const double mu2 = spectral_summary(g, true).mu2;
    Rational tau(static_cast<std::int64_t>(rng() % 20001) - 10000, 10000);
    if (done % 3 == 0) {
      // Thresholds close to mu2 exercise the exact side of the comparison.
      tau = Rational(static_cast<std::int64_t>(std::llround(mu2 * 1e5)) + (rng() % 2 ? 1 : -1), 100000);
    }
    if (std::abs(tau.to_double() - mu2) <= 1e-6) continue;
    if (exact_mu2_leq(g, tau) != (mu2 <= tau.to_double())) ++disagree;
    ++done;
  }
  if (disagree) o.fail(std::to_string(disagree) + " disagreements");
  else o.detail = "500 pairs, 0 disagreements";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(404);
  int yes_groc = 0, yes_gros = 0, violations = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Graph g = gnp_graph(n, 0.45, rng());
    const int k = static_cast<int>(rng() % 3);
    const double phi_now = g.m() ? oracle::conductance(g).value() : 0.0;
    const double phi0 = std::clamp(phi_now - 0.1 + 0.35 * static_cast<double>(rng() % 100) / 100.0, 0.0, 1.0);
    Decision d = decide_groc({g, k, phi0, std::nullopt});
    if (!d.answer) continue;
    ++yes_groc;
    const Graph fresh(n, apply_edits(g, *d.witness).edges());
    const double phi = fresh.m() ? oracle::conductance(fresh).value() : 0.0;
    if (d.witness->size() > k || phi < phi0 - 1e-12) ++violations;
    if (!decide_groc({g, k + 1, phi0, std::nullopt}).answer) ++violations;
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = gnp_graph(n, 0.45, rng());
    const int k = static_cast<int>(rng() % 3);
    const double mu_now = oracle::propagation_spectrum(g)(n - 2);
    const double t = std::clamp(mu_now - 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0, -1.0, 1.0);
    const Rational tau(static_cast<std::int64_t>(std::llround(t * 1000)), 1000);
    Decision d = decide_gros({g, k, tau, EigenOrder::signed_order});
    if (!d.answer) continue;
    ++yes_gros;
    const Graph fresh(n, apply_edits(g, *d.witness).edges());
    const double mu = oracle::propagation_spectrum(fresh)(n - 2);
    if (d.witness->size() > k || !exact_mu2_leq(fresh, tau) || mu > tau.to_double() + 1e-9) ++violations;
    if (!decide_gros({g, k + 1, tau, EigenOrder::signed_order}).answer) ++violations;
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  else
    o.detail = "200 instances (" + std::to_string(yes_groc) + " GROC yes, " + std::to_string(yes_gros) +
               " GROS yes), 0 violations";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto check = [&](const std::string& name, double got, double want) {
    if (!(std::abs(got - want) <= 1e-9)) o.fail(name + ": got " + real_text(got) + ", want " + real_text(want));
  };
  check("phi(K4)", conductance_exact(complete_graph(4)).phi_value(), oracle::conductance(complete_graph(4)).value());
  check("phi(K4) closed form", conductance_exact(complete_graph(4)).phi_value(), 2.0 / 3.0);
  check("phi(C4)", conductance_exact(cycle_graph(4)).phi_value(), oracle::conductance(cycle_graph(4)).value());
  check("phi(C4) closed form", conductance_exact(cycle_graph(4)).phi_value(), 0.5);
  check("phi(barbell5)", conductance_exact(barbell_graph(5)).phi_value(),
        oracle::conductance(barbell_graph(5)).value());
  check("phi(barbell5) closed form", conductance_exact(barbell_graph(5)).phi_value(), 1.0 / 21.0);
  check("lambda2(C4)", spectral_summary(cycle_graph(4), false).lambda2, 1.0 - std::cos(2 * M_PI / 4));
  check("mu2(K2)", spectral_summary(complete_graph(2), true).mu2, oracle::propagation_spectrum(complete_graph(2))(0));
  check("bisection(C4)", static_cast<double>(min_bisection_exact(cycle_graph(4)).width),
        static_cast<double>(oracle::bisection_width(cycle_graph(4))));
  check("R(C4 adjacent)", effective_resistance(cycle_graph(4), 0, 1), oracle::resistance_via_pinv(cycle_graph(4))(0, 1));
  check("R(C4 adjacent) closed form", effective_resistance(cycle_graph(4), 0, 1), 1.0 * 3.0 / (1.0 + 3.0));
  if (o.pass) o.detail = "7 values match";
  return o;
}

struct ReductionCase {
  Graph h;
  std::int64_t b = 0;
  std::uint64_t seed = 0;
};

Outcome criterion6(const std::vector<Graph>& corpus) {
  Outcome o;
  int instances = 0, witnesses = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& h = corpus[i];
    const int n = h.n();
    EmbeddingParams p;
    p.seed = 0x5eed + i;
    const ExpanderEmbedding e = embed_instance(h, p);
    const Rational c1 = c1_hat_oracle(e, h);
    if (measure_constants(e, h).c1_hat != c1) o.fail("c1_hat mismatch on instance " + std::to_string(i));
    const std::int64_t w = oracle::bisection_width(h);
    for (std::int64_t b : {w, w + 1}) {
      ++instances;
      const Rational bound = c1 * Rational(b + n, n);
      for (unsigned s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != n / 2) continue;
        std::vector<char> in(2 * n, 1), in_h(n, 0);
        for (int v = 0; v < n; ++v) in[v] = in_h[v] = (s >> v) & 1;
        if (crossing(h, in_h) > b) continue;
        ++witnesses;
        if (phi_of(e.g, in) > bound) o.fail("forward bound fails on instance " + std::to_string(i));
      }
      // Threshold arithmetic for every c1 < 1/6 on a grid, whenever B <= 2n.
      for (std::int64_t den = 7; den <= 64; den += 3) {
        ReductionConstants c;
        c.c1 = Rational(1, den);
        if (b > 2 * n) continue;
        const Rational phi0 = reduce_to_groc({h, b}, c, p).threshold;
        if (!(phi0 > Rational(1, 2) && phi0 >= Rational(1) - Rational(3) * c.c1)) {
          o.fail("phi0 <= 1/2 at c1 = 1/" + std::to_string(den));
        }
      }
    }
  }
  if (instances < 50) o.fail("only " + std::to_string(instances) + " instances");
  if (o.pass) o.detail = std::to_string(instances) + " instances, " + std::to_string(witnesses) + " witnesses";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(707);
  int largest = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + 2 * static_cast<int>(rng() % 4);
    Graph h = gnp_graph(n, 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng());
    BisectionInstance inst{h, static_cast<std::int64_t>(rng() % (h.m() + 3))};
    const bool truth = oracle::bisection_width(h) <= inst.b;
    for (auto target : {ScalingTarget::large, ScalingTarget::between}) {
      BisectionInstance s = target == ScalingTarget::large ? scale_instance_large(inst) : scale_instance_between(inst);
      largest = std::max(largest, s.h.n());
      const bool scaled = bisection_within(s.h, s.b).has_value();
      const bool brute_agrees = s.h.n() > 16 || (oracle::bisection_width(s.h) <= s.b) == truth;
      if (scaled != truth || !brute_agrees) {
        o.fail("instance " + std::to_string(i) + " (n=" + std::to_string(n) + ", B=" + std::to_string(inst.b) + ")");
      }
    }
  }
  if (o.pass)
    o.detail = "50 instances, largest scaled n=" + std::to_string(largest) + ", " + secs_text(seconds_since(t0)) + " s";
  return o;
}

// Recomputes every reported inequality term from primitive quantities.
bool terms_recomputable(const ReductionCertificate& c, std::string& why) {
  const auto& sk = c.skeleton;
  const Graph& h = sk.instance.h;
  const Graph& g = sk.embedding.g;
  const int n = h.n();
  const std::int64_t b = sk.instance.b;
  const Rational load = sk.constants.c1 * Rational(b + n, n);
  const Rational phi_g = to_rational(oracle::conductance(g));
  const Eigen::VectorXd lap = oracle::normalized_laplacian_spectrum(g);
  const Eigen::VectorXd prop = oracle::propagation_spectrum(g);
  Eigen::MatrixXd a = oracle::adjacency(g);
  for (int v = 0; v < g.n(); ++v) a.row(v) /= std::sqrt(3.0), a.col(v) /= std::sqrt(3.0);
  const double mu2_plain = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues()(g.n() - 2);

  std::map<std::string, std::string> want_exact;
  std::map<std::string, double> want_real;
  want_exact["phi_g"] = phi_g.str();
  if (c.forward.applicable) {
    const auto& s = c.bisection_truth.partition;
    std::vector<char> in(2 * n, 0), in_h(n, 0);
    for (Vertex v : s) in[v] = in_h[v] = 1;
    for (int u = n; u < 2 * n; ++u) in[u] = 1;
    const Rational phi_x = phi_of(g, in);
    const Rational delta_s(crossing(h, in_h));
    want_exact["delta_h_s"] = delta_s.str();
    want_exact["phi_g_s_union_u"] = phi_x.str();
    const Rational c1 = c1_hat_oracle(sk.embedding, h);
    want_exact["c1_hat_bound"] = (c1 * (delta_s + Rational(n)) / Rational(n)).str();
    want_exact["c1_hat_bound_b"] = (c1 * Rational(b + n, n)).str();
    want_exact["c1_bound"] = load.str();
    want_exact["configured_bound_holds"] = phi_x <= load ? "pass" : "fail";
    want_exact["one_minus_phi0"] = (Rational(1) - sk.threshold).str();
    want_exact["two_phi_g_s_union_u"] = (Rational(2) * phi_x).str();
    want_exact["one_minus_2c1_load"] = (Rational(1) - Rational(2) * load).str();
  }
  if (c.reverse.applicable) {
    // The extraction starts from the optimal cut reported by the exact search.
    const Cut best = conductance_exact(g);
    if (best.phi != phi_g) {
      why = "optimal cut value differs from the enumeration oracle";
      return false;
    }
    std::vector<Vertex> s;
    std::vector<char> in_h(n, 0);
    for (Vertex v : best.subset)
      if (v < n) s.push_back(v), in_h[v] = 1;
    const std::int64_t ds = crossing(h, in_h);
    want_exact["extracted_size"] = std::to_string(s.size());
    want_exact["delta_h_extracted"] = std::to_string(ds);
    want_exact["c2_bound"] = (sk.constants.c2 * phi_g * Rational(n)).str();
    const auto m = measure_constants(sk.embedding, h);
    want_exact["c2_hat_bound"] = m.c2_hat ? (*m.c2_hat * phi_g * Rational(n)).str() : "unbounded";
    if (!s.empty() && static_cast<int>(s.size()) < n) {
      // Greedy balancing re-run by hand: move from the larger side, fewest added crossings, smallest id.
      std::vector<char> side = in_h;
      int count = static_cast<int>(s.size());
      while (count != n / 2) {
        const char from = count > n / 2 ? 1 : 0;
        int pick = -1;
        std::int64_t best_delta = 0;
        for (int v = 0; v < n; ++v) {
          if (side[v] != from) continue;
          std::int64_t same = 0, other = 0;
          for (Vertex w : h.neighbors(v)) (side[w] == from ? same : other) += 1;
          if (pick < 0 || same - other < best_delta) pick = v, best_delta = same - other;
        }
        side[pick] = static_cast<char>(1 - from);
        count += from ? -1 : 1;
      }
      want_exact["balanced_width"] = std::to_string(crossing(h, side));
      want_exact["c3_c2_bound"] = (sk.constants.c3 * sk.constants.c2 * phi_g * Rational(n)).str();
    }
    want_exact["budget_b"] = std::to_string(b);
    const Rational delta = Rational(2) * load + sk.epsilon;
    want_exact["delta"] = delta.str();
    want_real["sqrt_2delta"] = std::sqrt(2.0 * delta.to_double());
    want_real["cheeger_upper"] = std::sqrt(2.0 * std::max(0.0, lap(1)));
  }
  if (sk.problem == ReductionProblem::groc) {
    want_exact["phi0"] = sk.threshold.str();
  } else {
    want_exact["tau"] = sk.threshold.str();
    want_real["mu2"] = prop(g.n() - 2);
    want_real["lambda2"] = lap(1);
    want_real["mu2_nonaugmented"] = mu2_plain;
  }
  for (const auto* d : {&c.forward, &c.reverse}) {
    for (const auto& [name, value] : d->terms) {
      if (auto it = want_exact.find(name); it != want_exact.end()) {
        if (it->second != value) {
          why = name + ": reported " + value + ", recomputed " + it->second;
          return false;
        }
      } else if (auto jt = want_real.find(name); jt != want_real.end()) {
        if (std::abs(std::stod(value) - jt->second) > 1e-9) {
          why = name + ": reported " + value + ", recomputed " + real_text(jt->second);
          return false;
        }
      } else {
        why = "no recomputation for term " + name;
        return false;
      }
    }
  }
  return true;
}

Outcome criterion8(const std::vector<Graph>& corpus) {
  Outcome o;
  ReductionConstants gros_consts;
  gros_consts.c1 = Rational(1, 64);
  std::map<std::string, std::pair<int, int>> agree;  // problem/direction -> (agreements, total)
  std::vector<std::string> first_pass;
  int certs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& h = corpus[i];
    EmbeddingParams p;
    p.seed = 0x5eed + i;
    const std::int64_t w = oracle::bisection_width(h);
    for (std::int64_t b : {w - 1, w}) {
      if (b < 0) continue;
      for (auto problem : {ReductionProblem::groc, ReductionProblem::gros}) {
        const auto skel = problem == ReductionProblem::groc ? reduce_to_groc({h, b}, {}, p)
                                                            : reduce_to_gros({h, b}, gros_consts, p);
        const ReductionCertificate c = verify_reduction(skel);
        ++certs;
        if (certs <= 40) first_pass.push_back(dump(certificate_to_json(c)));
        std::string why;
        if (!terms_recomputable(c, why)) o.fail("instance " + std::to_string(i) + ": " + why);
        if (!c.all_asserted_pass()) o.fail("asserted check failed on instance " + std::to_string(i));
        const std::string key = std::string(to_string(problem)) + (c.bisection_yes ? " yes" : " no");
        agree[key].first += c.agreement;
        agree[key].second += 1;
      }
    }
  }
  // Determinism: the first certificates rebuilt from scratch serialize identically.
  int idx = 0;
  for (std::size_t i = 0; i < corpus.size() && idx < static_cast<int>(first_pass.size()); ++i) {
    EmbeddingParams p;
    p.seed = 0x5eed + i;
    const std::int64_t w = oracle::bisection_width(corpus[i]);
    for (std::int64_t b : {w - 1, w}) {
      if (b < 0) continue;
      for (auto problem : {ReductionProblem::groc, ReductionProblem::gros}) {
        if (idx >= static_cast<int>(first_pass.size())) break;
        const auto skel = problem == ReductionProblem::groc ? reduce_to_groc({corpus[i], b}, {}, p)
                                                            : reduce_to_gros({corpus[i], b}, gros_consts, p);
        if (dump(certificate_to_json(verify_reduction(skel))) != first_pass[idx]) o.fail("nondeterministic certificate");
        ++idx;
      }
    }
  }
  std::ostringstream report;
  report << certs << " certificates; agreement";
  for (const auto& [key, v] : agree) report << " | " << key << ": " << v.first << "/" << v.second;
  std::printf("    agreement report: %s\n", report.str().c_str());
  if (o.pass) o.detail = report.str();
  return o;
}

Eigen::MatrixXd ppr_dense_solve(const Graph& g, double alpha) {
  const auto d = oracle::degrees(g);
  Eigen::MatrixXd t = oracle::adjacency(g) + Eigen::MatrixXd::Identity(g.n(), g.n());
  for (int v = 0; v < g.n(); ++v) t.row(v) /= (d[v] + 1.0);
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(g.n(), g.n()) - (1.0 - alpha) * t;
  return alpha * m.fullPivLu().inverse();
}

Outcome criterion9() {
  Outcome o;
  const Graph bb = barbell_graph(5);
  const RewireResult r = greedy_rewire(bb, 1, GreedyObjective::conductance);
  const Rational before = to_rational(oracle::conductance(bb));
  const Rational after = to_rational(oracle::conductance(r.graph));
  if (!(after > before)) o.fail("greedy: phi " + before.str() + " -> " + after.str());

  std::mt19937_64 rng(909);
  int disconnected = 0;
  for (int i = 0; i < 100; ++i) {
    Graph g = oracle::random_connected(rng, 4, 20, i % 2 == 0);
    const double f = static_cast<double>(rng() % 11) / 10.0;
    if (!oracle::connected(sdrf_like_rewire(g, 1 + static_cast<int>(rng() % 10), f).graph)) ++disconnected;
  }
  if (disconnected) o.fail("sdrf disconnected " + std::to_string(disconnected) + " graphs");

  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    Graph g = gnp_graph(2 + static_cast<int>(rng() % 9), 0.4, rng());
    const double alpha = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
    worst = std::max(worst, (ppr_matrix(g, alpha) - ppr_dense_solve(g, alpha)).cwiseAbs().maxCoeff());
  }
  if (worst > 1e-8) o.fail("ppr deviation " + real_text(worst));
  if (o.pass)
    o.detail = "greedy phi " + before.str() + " -> " + after.str() + "; sdrf 0/100 disconnected; ppr max deviation " +
               real_text(worst);
  return o;
}

Outcome criterion10() {
  Outcome o;
  const Graph g20 = random_regular_graph(20, 3, 1010);
  auto t0 = Clock::now();
  const Cut c = conductance_exact(g20);
  const double t_phi = seconds_since(t0);
  if (t_phi >= 60.0) o.fail("conductance n=20 took " + secs_text(t_phi) + " s");

  const Graph big = random_regular_graph(5000, 3, 1011);
  t0 = Clock::now();
  SpectralSummary s;
  try {
    s = spectral_summary(big, false);
  } catch (const ConvergenceError& e) {
    o.fail(std::string("iterative solver: ") + e.what());
    return o;
  }
  const double t_l2 = seconds_since(t0);
  if (s.method != SpectralMethod::iterative) o.fail("dense path used for n=5000");
  if (s.residual_bound > 1e-6) o.fail("residual " + real_text(s.residual_bound));
  if (t_l2 >= 10.0) o.fail("lambda2 n=5000 took " + secs_text(t_l2) + " s");
  if (o.pass)
    o.detail = "phi(n=20)=" + c.phi.str() + " in " + secs_text(t_phi) + " s; lambda2(n=5000)=" +
               real_text(s.lambda2) + " residual " + real_text(s.residual_bound) + " in " + secs_text(t_l2) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<Graph> corpus = reduction_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Cheeger inequality on 200 random graphs", criterion1},
      {"2 regular-graph spectral identity", criterion2},
      {"3 exact vs floating eigenvalue threshold", criterion3},
      {"4 decision soundness and budget monotonicity", criterion4},
      {"5 known values", criterion5},
      {"6 reduction forward direction", [&] { return criterion6(corpus); }},
      {"7 scaling gadget equivalence", criterion7},
      {"8 agreement report", [&] { return criterion8(corpus); }},
      {"9 heuristic sanity", criterion9},
      {"10 performance floor", criterion10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
