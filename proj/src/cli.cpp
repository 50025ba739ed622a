// SPDX-License-Identifier: Apache-2.0
#include "graphopt/cli.hpp"

#include <omp.h>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "graphopt/certificate.hpp"
#include "graphopt/cuts.hpp"
#include "graphopt/error.hpp"
#include "graphopt/generators.hpp"
#include "graphopt/graph_io.hpp"
#include "graphopt/heuristics.hpp"
#include "graphopt/propagation.hpp"
#include "graphopt/reductions.hpp"
#include "graphopt/rewiring.hpp"
#include "graphopt/spectral.hpp"

namespace graphopt {

namespace {

struct RunConfig {
  std::uint64_t seed = 0x5eed;
  std::string format = "json";
  int exact_limit_n = kDefaultConductanceLimit;
  std::int64_t exact_limit_k = 200000;
  int workers = 0;
  std::string output;
};

// Flat key/value rendering for --format text and csv.
std::string render_flat(const Json& j, const std::string& format) {
  Json flat = j.flatten();
  std::ostringstream os;
  if (format == "csv") {
    bool first = true;
    for (auto it = flat.begin(); it != flat.end(); ++it) os << (first ? "" : ",") << it.key(), first = false;
    os << "\n";
    first = true;
    for (auto it = flat.begin(); it != flat.end(); ++it) {
      os << (first ? "" : ",") << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
      first = false;
    }
    os << "\n";
  } else {
    for (auto it = flat.begin(); it != flat.end(); ++it) {
      os << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
    }
  }
  return os.str();
}

std::string render(const Json& j, const RunConfig& cfg) {
  if (cfg.format == "json") return dump(j);
  return render_flat(j, cfg.format);
}

Json metrics(const Graph& g, const RunConfig& cfg) {
  Json j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["connected"] = g.is_connected();
  if (g.n() < 2) return j;
  const auto s = spectral_summary(g, true);
  const auto nonaug = spectral_summary(g, false);
  j["lambda2"] = nonaug.lambda2;
  j["mu2"] = s.mu2;
  j["mu_min"] = s.mu_min;
  j["slack"] = s.slack;
  j["method"] = std::string(to_string(s.method));
  j["residual_bound"] = std::max(s.residual_bound, nonaug.residual_bound);
  const auto interval = cheeger_interval(nonaug);
  j["cheeger"] = {{"lower", interval.lower}, {"upper", interval.upper}, {"upper_clipped", interval.upper_clipped()}};
  std::optional<Cut> cut;
  try {
    cut = conductance_exact(g, cfg.exact_limit_n);
  } catch (const Error& e) {
    if (e.code() != Errc::ExactLimitExceeded) throw;
  }
  if (cut) {
    j["phi"] = cut->phi.str();
    j["phi_value"] = cut->phi_value();
    j["witness"] = cut->subset;
    j["cheeger_verdict"] = interval.contains(cut->phi_value()) ? "pass" : "fail";
  } else {
    j["phi"] = nullptr;
    j["cheeger_verdict"] = "n/a";
  }
  return j;
}

ReductionConstants default_constants(ReductionProblem p) {
  ReductionConstants c;
  if (p == ReductionProblem::gros) c.c1 = Rational(1, 64);
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Graph conductance, spectral gap, rewiring and reduction toolkit", "graphopt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--exact-limit-n", cfg.exact_limit_n, "Largest n for exact enumeration");
  app.add_option("--exact-limit-k", cfg.exact_limit_k, "Largest number of candidate edit sets");
  app.add_option("--workers", cfg.workers, "Worker threads (0 = runtime default)");
  app.add_option("-o,--output", cfg.output, "Write output here instead of stdout");

  // analyze
  std::string graph_file;
  int decay_layers = -1;
  auto* analyze = app.add_subcommand("analyze", "Spectral summary, conductance and Cheeger check");
  analyze->add_option("graph", graph_file, "Graph file")->required();
  analyze->add_option("--decay", decay_layers, "Also report Dirichlet energy decay up to this many layers");

  // decide
  std::string problem, threshold_text, order_text = "signed";
  int budget_k = 0;
  auto* decide = app.add_subcommand("decide", "Exact GROC / GROS decision");
  decide->add_option("problem", problem)->required()->check(CLI::IsMember({"groc", "gros"}));
  decide->add_option("graph", graph_file)->required();
  decide->add_option("k", budget_k, "Edit budget")->required();
  decide->add_option("threshold", threshold_text, "phi0 or tau, e.g. 1/3")->required();
  decide->add_option("--order", order_text)->check(CLI::IsMember({"signed", "absolute"}));

  // rewire
  std::string heuristic, objective_text = "conductance";
  int budget = 0, cap = 4;
  double fraction = 0.5, alpha = 0.15, epsilon = 1e-4;
  auto* rewire = app.add_subcommand("rewire", "Rewiring heuristics");
  rewire->add_option("heuristic", heuristic)->required()->check(CLI::IsMember({"greedy", "sdrf", "ppr"}));
  rewire->add_option("graph", graph_file)->required();
  rewire->add_option("--budget", budget, "Edit budget");
  rewire->add_option("--objective", objective_text)->check(CLI::IsMember({"conductance", "spectral_gap"}));
  rewire->add_option("--removal-fraction", fraction);
  rewire->add_option("--alpha", alpha);
  rewire->add_option("--epsilon", epsilon);
  rewire->add_option("--cap", cap, "PPR entries kept per node");

  // reduce
  std::int64_t budget_b = 0;
  std::string c1_text, c2_text, c3_text, eps_text, graph_out;
  double pad_floor = 0.0;
  bool scale = false;
  auto* reduce = app.add_subcommand("reduce", "Minimum Bisection to GROC / GROS reduction with certificate");
  reduce->add_option("problem", problem)->required()->check(CLI::IsMember({"groc", "gros"}));
  reduce->add_option("graph", graph_file, "Bisection instance graph")->required();
  reduce->add_option("b", budget_b, "Bisection budget")->required();
  reduce->add_option("--c1", c1_text);
  reduce->add_option("--c2", c2_text);
  reduce->add_option("--c3", c3_text);
  reduce->add_option("--epsilon", eps_text);
  reduce->add_option("--pad-floor", pad_floor);
  reduce->add_option("--graph-out", graph_out, "Write the constructed graph here");
  reduce->add_flag("--scale", scale, "Scale the instance into the n/2 <= B <= 2n budget window first");

  // verify
  std::string verify_file;
  std::optional<std::int64_t> verify_b;
  auto* verify = app.add_subcommand("verify", "Recompute a certificate, or certify a bisection instance");
  verify->add_option("input", verify_file, "Certificate JSON or bisection graph file")->required();
  verify->add_option("--b", verify_b, "Bisection budget when the input is a graph");
  verify->add_option("--problem", problem)->check(CLI::IsMember({"groc", "gros"}));

  // gen
  std::string family;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "gnp", "random_regular", "barbell"}));
  gen->add_option("params", params, "Family parameters")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }

  std::string buffer;
  int code = 0;
  try {
    if (cfg.workers > 0) omp_set_num_threads(cfg.workers);

    if (*analyze) {
      const Graph g = read_graph_file(graph_file);
      Json j = metrics(g, cfg);
      if (decay_layers >= 0) {
        std::mt19937_64 rng(cfg.seed);
        std::normal_distribution<double> normal;
        FeatureMatrix x(g.n(), 4);
        for (int i = 0; i < x.rows(); ++i)
          for (int k = 0; k < x.cols(); ++k) x(i, k) = normal(rng);
        const auto rows = decay_report(g, x, decay_layers);
        if (cfg.format == "csv") {
          buffer = decay_csv(rows);
        } else {
          Json arr = Json::array();
          for (const auto& r : rows) {
            arr.push_back({{"layer", r.layer}, {"energy", r.energy}, {"s_bound", r.s_bound}, {"mu2_bound", r.mu2_bound}});
          }
          j["decay"] = arr;
        }
      }
      if (buffer.empty()) buffer = render(j, cfg);
    } else if (*decide) {
      const Graph g = read_graph_file(graph_file);
      const Rational threshold = Rational::parse(threshold_text);
      DecisionLimits limits;
      limits.conductance_limit = cfg.exact_limit_n;
      limits.max_candidates = cfg.exact_limit_k;
      Decision d;
      if (problem == "groc") {
        if (threshold < Rational(0) || threshold > Rational(1)) {
          throw Error(Errc::InvalidArgument, "phi0 must lie in [0, 1]");
        }
        d = decide_groc({g, budget_k, threshold.to_double(), threshold}, limits);
      } else {
        if (threshold < Rational(-1) || threshold > Rational(1)) {
          throw Error(Errc::InvalidArgument, "tau must lie in [-1, 1]");
        }
        d = decide_gros({g, budget_k, threshold, parse_eigen_order(order_text)}, limits);
      }
      buffer = render(decision_to_json(d), cfg);
      code = d.answer ? 0 : 1;
    } else if (*rewire) {
      const Graph g = read_graph_file(graph_file);
      RewireResult r;
      if (heuristic == "greedy") {
        GreedyOptions opts;
        opts.conductance_limit = cfg.exact_limit_n;
        r = greedy_rewire(g, budget, parse_greedy_objective(objective_text), opts);
      } else if (heuristic == "sdrf") {
        r = sdrf_like_rewire(g, budget, fraction);
      } else {
        r = ppr_rewire(g, alpha, epsilon, cap);
      }
      Json steps = Json::array();
      for (const auto& s : r.steps) steps.push_back({{"action", s.action}, {"pair", {s.pair.u, s.pair.v}}, {"score", s.score}});
      Json j = {{"heuristic", heuristic},
                {"edits", edit_set_to_json(r.edits)},
                {"steps", steps},
                {"trace", r.trace},
                {"before", metrics(g, cfg)},
                {"after", metrics(r.graph, cfg)}};
      buffer = render(j, cfg);
    } else if (*reduce) {
      const auto p = parse_reduction_problem(problem);
      BisectionInstance inst{read_graph_file(graph_file), budget_b};
      if (scale) inst = p == ReductionProblem::groc ? scale_instance_between(inst) : scale_instance_large(inst);
      ReductionConstants consts = default_constants(p);
      if (!c1_text.empty()) consts.c1 = Rational::parse(c1_text);
      if (!c2_text.empty()) consts.c2 = Rational::parse(c2_text);
      if (!c3_text.empty()) consts.c3 = Rational::parse(c3_text);
      if (!eps_text.empty()) consts.epsilon = Rational::parse(eps_text);
      EmbeddingParams params;
      params.seed = cfg.seed;
      params.pad_floor = pad_floor;
      const auto skel = p == ReductionProblem::groc ? reduce_to_groc(inst, consts, params)
                                                    : reduce_to_gros(inst, consts, params);
      if (!graph_out.empty()) write_graph_file(graph_out, skel.embedding.g);
      const auto cert = verify_reduction(skel);
      buffer = render(certificate_to_json(cert), cfg);
    } else if (*verify) {
      std::ifstream in(verify_file, std::ios::binary);
      if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + verify_file + "'");
      std::stringstream text;
      text << in.rdbuf();
      const std::string body = text.str();
      const auto first = body.find_first_not_of(" \t\r\n");
      Json report;
      ReductionCertificate cert;
      if (first != std::string::npos && body[first] == '{') {
        Json stored;
        try {
          stored = Json::parse(body);
        } catch (const Json::exception& e) {
          throw Error(Errc::InvalidArgument, std::string("certificate is not valid JSON: ") + e.what());
        }
        cert = verify_reduction(skeleton_from_json(stored));
        const auto diffs = json_diff(stored, certificate_to_json(cert));
        if (!diffs.empty()) {
          for (const auto& d : diffs) err << "mismatch " << d << "\n";
          report = {{"status", "mismatch"}, {"diff", diffs}};
          out << render(report, cfg);
          return 5;
        }
      } else {
        if (!verify_b) throw Error(Errc::InvalidArgument, "--b is required when verifying a bisection instance");
        const auto p = parse_reduction_problem(problem.empty() ? "groc" : problem);
        BisectionInstance inst{parse_graph(body), *verify_b};
        EmbeddingParams params;
        params.seed = cfg.seed;
        const auto skel = p == ReductionProblem::groc ? reduce_to_groc(inst, default_constants(p), params)
                                                      : reduce_to_gros(inst, default_constants(p), params);
        cert = verify_reduction(skel);
      }
      const bool ok = cert.all_asserted_pass();
      report = {{"status", ok ? "pass" : "fail"},
                {"checks", cert.checks},
                {"forward_asserted", cert.forward.asserted},
                {"reverse_asserted", cert.reverse.asserted},
                {"agreement", cert.agreement}};
      buffer = render(report, cfg);
      code = ok ? 0 : 1;
    } else if (*gen) {
      auto need = [&](std::size_t count) {
        if (params.size() != count) {
          throw Error(Errc::InvalidArgument, family + " takes " + std::to_string(count) + " parameter(s)");
        }
      };
      auto to_int = [](const std::string& s) {
        std::size_t pos = 0;
        int v = 0;
        try {
          v = std::stoi(s, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != s.size() || s.empty()) throw Error(Errc::InvalidArgument, "expected an integer, got '" + s + "'");
        return v;
      };
      Graph g;
      if (family == "complete") {
        need(1);
        g = complete_graph(to_int(params[0]));
      } else if (family == "cycle") {
        need(1);
        g = cycle_graph(to_int(params[0]));
      } else if (family == "barbell") {
        need(1);
        g = barbell_graph(to_int(params[0]));
      } else if (family == "gnp") {
        need(2);
        g = gnp_graph(to_int(params[0]), Rational::parse(params[1]).to_double(), cfg.seed);
      } else {
        need(2);
        g = random_regular_graph(to_int(params[0]), to_int(params[1]), cfg.seed);
      }
      buffer = serialize_graph(g);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 3;
  }

  if (cfg.output.empty()) {
    out << buffer;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return 4;
    }
    file << buffer;
  }
  return code;
}

}  // namespace graphopt
