// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphopt/cuts.hpp"
#include "graphopt/graph.hpp"
#include "graphopt/rational.hpp"
#include "graphopt/rewiring.hpp"

namespace graphopt {

/// Minimum Bisection instance: does h have a balanced partition with at most b crossing edges?
struct BisectionInstance {
  Graph h;
  std::int64_t b = 0;
};

/// Throws OddVertexCount or InvalidArgument (negative budget).
void validate_instance(const BisectionInstance& inst);

// ---- scaling -------------------------------------------------------------------------

/// Two cliques of size `clique` joined by an r-regular circulant bipartite graph, appended
/// after the original vertices. Every balanced cut that keeps the cliques on opposite sides
/// pays exactly r * clique extra edges; `clique` is large enough that any other placement
/// costs more than the original budget on top of that.
struct ScalingGadget {
  int clique = 0;
  int r = 0;
};

enum class ScalingTarget { large, between };

/// Smallest gadget (by clique size, then r) meeting the target window and the rigidity test.
ScalingGadget plan_scaling(int n, std::int64_t b, ScalingTarget target);
BisectionInstance apply_scaling(const BisectionInstance& inst, const ScalingGadget& gadget);

/// Equivalent instance with b >= 2n. Identity when already true; b is first clamped to m.
BisectionInstance scale_instance_large(const BisectionInstance& inst);
/// Equivalent instance with n/2 <= b <= 2n.
BisectionInstance scale_instance_between(const BisectionInstance& inst);

// ---- expander embedding --------------------------------------------------------------

struct CertifiedExpander {
  Graph g;
  double lambda2 = 0.0;
  int attempts = 0;
};

/// Random 3-regular graphs until lambda2 of the normalized Laplacian reaches the floor.
/// Throws InfeasibleParameters (odd or n < 4) or CertificationFailure.
CertifiedExpander build_certified_expander(int n, double lambda2_floor, std::uint64_t seed, int max_retries = 200);

struct EmbeddingParams {
  double pad_floor = 0.0;
  std::uint64_t seed = 0x5eed;
  int max_retries = 200;
};

struct ExpanderEmbedding {
  Graph g;                               // 3-regular on 2n vertices
  std::vector<Vertex> original_vertices; // 0..n-1, H induced here
  std::vector<Vertex> pad_vertices;      // n..2n-1
  double certified_lambda2 = 0.0;        // lambda2 of the subgraph induced on the pad vertices
  int attempts = 0;
};

/// Each v gets 3 - deg(v) edges to pad vertices, dealt round-robin; the remaining pad
/// degree is completed inside U by a seeded random pairing (Havel-Hakimi as fallback).
/// Throws DegreeTooHigh, OddVertexCount, InvalidArgument (n < 4), PadCompletionFailure.
ExpanderEmbedding embed_instance(const Graph& h, const EmbeddingParams& params = {});

// ---- constants -----------------------------------------------------------------------

struct ReductionConstants {
  Rational c1{1, 10};
  Rational c2{1};
  Rational c3{2, 5};
  std::optional<Rational> epsilon;  // GROS slack; default min(1/2 (1 - 2c1(B+n)/n), c1 B / n)
};

enum class ReductionProblem { groc, gros };
std::string_view to_string(ReductionProblem problem);
ReductionProblem parse_reduction_problem(std::string_view name);

/// GROC: c1 < 1/6, c2 c3 < 1/2, c3 < 1. GROS: c1 < 1/48, 2 c2 sqrt(3 c1) < 1/2.
/// All constants must be positive. Throws ConstantConditionViolated.
void validate_constants(const ReductionConstants& c, ReductionProblem problem);

/// Constants measured by enumeration on one embedding. nullopt means unbounded.
struct MeasuredConstants {
  Rational c1_hat;
  std::optional<Rational> c2_hat;
  Rational c3_hat;
};

inline constexpr int kDefaultReductionLimit = 10;  // largest |V(H)| for enumeration-based checks

/// Throws ExactLimitExceeded when h.n exceeds `limit`.
MeasuredConstants measure_constants(const ExpanderEmbedding& emb, const Graph& h, int limit = kDefaultReductionLimit);

// ---- reductions ----------------------------------------------------------------------

struct ReductionSkeleton {
  ReductionProblem problem = ReductionProblem::groc;
  BisectionInstance instance;
  ReductionConstants constants;
  EmbeddingParams params;
  ExpanderEmbedding embedding;
  Rational threshold;  // phi0 for GROC, tau for GROS
  Rational epsilon;    // GROS only
  int budget_k = 0;
  bool inverted = true;  // bisection yes maps to a no instance
  bool window_ok = false;  // n/2 <= B <= 2n (GROC) or B >= 2n (GROS)

  GrocInstance groc() const;
  GrosInstance gros() const;
};

/// phi0 = 1 - c1 (B + n) / n with K = 0. Throws ConstantConditionViolated, DegreeTooHigh.
ReductionSkeleton reduce_to_groc(const BisectionInstance& inst, const ReductionConstants& consts,
                                 const EmbeddingParams& params = {});
/// tau = 1 - 2 c1 (B + n) / n - eps with K = 0.
ReductionSkeleton reduce_to_gros(const BisectionInstance& inst, const ReductionConstants& consts,
                                 const EmbeddingParams& params = {});

/// One direction of the reduction biconditional, evaluated on a concrete instance. `asserted` is the part
/// that must hold on every instance; `holds` is the finite-scale outcome, reported only.
struct DirectionCheck {
  bool applicable = false;
  bool asserted = true;
  bool holds = false;
  std::map<std::string, std::string> terms;  // exact rationals as "p/q", reals in %.17g
};

struct ReductionCertificate {
  ReductionSkeleton skeleton;
  BisectionResult bisection_truth;
  bool bisection_yes = false;
  MeasuredConstants measured;
  double graph_value = 0.0;              // phi(G) or mu2(P_G)
  std::optional<Rational> graph_value_exact;  // phi(G)
  bool target_answer = false;            // raw GROC / GROS answer at K = 0
  bool implied_bisection = false;        // inverted target answer
  DirectionCheck forward;
  DirectionCheck reverse;
  bool agreement = false;
  std::map<std::string, std::string> checks;  // named asserted identities, "pass" / "fail"

  /// All asserted checks and direction assertions pass.
  bool all_asserted_pass() const;
};

/// Recomputes the truth, the graph value and both inequality chains. Throws ExactLimitExceeded.
ReductionCertificate verify_reduction(const ReductionSkeleton& skeleton, int limit = kDefaultReductionLimit);

}  // namespace graphopt
