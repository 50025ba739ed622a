// SPDX-License-Identifier: Apache-2.0
#include "graphopt/certificate.hpp"

#include <cmath>

#include "graphopt/error.hpp"

namespace graphopt {

namespace {

Json real_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json rational_or_null(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

Json check_to_json(const DirectionCheck& d) {
  return {{"applicable", d.applicable}, {"asserted", d.asserted}, {"holds", d.holds}, {"terms", d.terms}};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(Errc::InvalidArgument, std::string("certificate is missing field '") + key + "'");
  }
  return j.at(key);
}

Rational rational_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(Errc::InvalidArgument, std::string("field '") + key + "' must be a \"p/q\" string");
  return Rational::parse(v.get<std::string>());
}

}  // namespace

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json edit_set_to_json(const EditSet& edits) {
  return {{"add", edges_to_json(edits.additions())}, {"remove", edges_to_json(edits.removals())}};
}

Json cut_to_json(const Cut& cut) {
  return {{"subset", cut.subset},        {"boundary", cut.boundary_size},      {"vol_s", cut.vol_s},
          {"vol_complement", cut.vol_complement}, {"phi", cut.phi.str()}, {"phi_value", cut.phi_value()}};
}

Json decision_to_json(const Decision& d) {
  return {{"answer", d.answer ? "yes" : "no"},
          {"witness", d.witness ? edit_set_to_json(*d.witness) : Json(nullptr)},
          {"value", real_or_null(d.value_achieved)},
          {"objective", d.objective}};
}

Json certificate_to_json(const ReductionCertificate& cert) {
  const auto& s = cert.skeleton;
  const auto& emb = s.embedding;
  const auto& c = s.constants;
  Json j;
  j["problem"] = std::string(to_string(s.problem));
  j["instance"] = {{"n", s.instance.h.n()}, {"edges", edges_to_json(s.instance.h.edges())}, {"b", s.instance.b}};
  j["seed"] = s.params.seed;
  j["params"] = {{"pad_floor", s.params.pad_floor}, {"max_retries", s.params.max_retries}};
  j["constants"] = {
      {"configured", {{"c1", c.c1.str()}, {"c2", c.c2.str()}, {"c3", c.c3.str()}, {"epsilon", rational_or_null(c.epsilon)}}},
      {"measured",
       {{"c1_hat", cert.measured.c1_hat.str()},
        {"c2_hat", rational_or_null(cert.measured.c2_hat)},
        {"c3_hat", cert.measured.c3_hat.str()}}}};
  j["embedding"] = {{"n", emb.g.n()},
                    {"edges", edges_to_json(emb.g.edges())},
                    {"original_vertices", emb.original_vertices},
                    {"pad_vertices", emb.pad_vertices},
                    {"certified_lambda2", emb.certified_lambda2},
                    {"attempts", emb.attempts}};
  j["target"] = {{"budget_k", s.budget_k},
                 {"threshold_name", s.problem == ReductionProblem::groc ? "phi0" : "tau"},
                 {"threshold", s.threshold.str()},
                 {"epsilon", s.epsilon.str()},
                 {"window_ok", s.window_ok}};
  j["bisection_truth"] = {{"width", cert.bisection_truth.width},
                          {"partition", cert.bisection_truth.partition},
                          {"yes", cert.bisection_yes}};
  j["graph_value"] = real_or_null(cert.graph_value);
  j["graph_value_exact"] = rational_or_null(cert.graph_value_exact);
  j["target_answer"] = cert.target_answer ? "yes" : "no";
  j["implied_bisection"] = cert.implied_bisection ? "yes" : "no";
  j["inverted"] = s.inverted;
  j["forward"] = check_to_json(cert.forward);
  j["reverse"] = check_to_json(cert.reverse);
  j["agreement"] = cert.agreement;
  j["checks"] = cert.checks;
  return j;
}

ReductionSkeleton skeleton_from_json(const Json& j) {
  try {
    const auto problem = parse_reduction_problem(field(j, "problem").get<std::string>());
    const Json& inst = field(j, "instance");
    std::vector<Edge> edges;
    for (const auto& e : field(inst, "edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    BisectionInstance bi{Graph(field(inst, "n").get<int>(), edges), field(inst, "b").get<std::int64_t>()};

    const Json& configured = field(field(j, "constants"), "configured");
    ReductionConstants consts;
    consts.c1 = rational_field(configured, "c1");
    consts.c2 = rational_field(configured, "c2");
    consts.c3 = rational_field(configured, "c3");
    if (configured.contains("epsilon") && !configured.at("epsilon").is_null()) {
      consts.epsilon = rational_field(configured, "epsilon");
    }
    EmbeddingParams params;
    params.seed = field(j, "seed").get<std::uint64_t>();
    const Json& p = field(j, "params");
    params.pad_floor = field(p, "pad_floor").get<double>();
    params.max_retries = field(p, "max_retries").get<int>();
    return problem == ReductionProblem::groc ? reduce_to_groc(bi, consts, params) : reduce_to_gros(bi, consts, params);
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed certificate: ") + e.what());
  }
}

std::vector<std::string> json_diff(const Json& expected, const Json& actual, const std::string& path) {
  std::vector<std::string> out;
  if (expected.is_object() && actual.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      const std::string sub = path.empty() ? it.key() : path + "." + it.key();
      if (!actual.contains(it.key())) {
        out.push_back(sub + ": " + it.value().dump() + " -> (missing)");
        continue;
      }
      auto more = json_diff(it.value(), actual.at(it.key()), sub);
      out.insert(out.end(), more.begin(), more.end());
    }
    for (auto it = actual.begin(); it != actual.end(); ++it) {
      if (!expected.contains(it.key())) out.push_back((path.empty() ? "" : path + ".") + it.key() + ": (missing) -> " + it.value().dump());
    }
    return out;
  }
  if (expected != actual) out.push_back((path.empty() ? "(root)" : path) + ": " + expected.dump() + " -> " + actual.dump());
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace graphopt
