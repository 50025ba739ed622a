// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "graphopt/error.hpp"
#include "graphopt/generators.hpp"
#include "graphopt/graph.hpp"
#include "graphopt/graph_io.hpp"
#include "graphopt/matrix.hpp"
#include "oracles.hpp"

using namespace graphopt;

namespace {

Graph c4() { return cycle_graph(4); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;  // sentinel when nothing threw; checked below with a flag
}

bool throws(auto&& fn) {
  try {
    fn();
  } catch (const Error&) {
    return true;
  }
  return false;
}

}  // namespace

TEST(BuildGraph, CycleFromPairs) {
  std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  Graph g = build_graph(4, pairs);
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 4);
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g, c4());
}

TEST(BuildGraph, RejectsInvalidInput) {
  std::vector<std::pair<Vertex, Vertex>> loop{{0, 0}};
  std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}};
  std::vector<std::pair<Vertex, Vertex>> range{{0, 4}};
  ASSERT_TRUE(throws([&] { build_graph(2, loop); }));
  EXPECT_EQ(code_of([&] { build_graph(2, loop); }), Errc::SelfLoop);
  EXPECT_EQ(code_of([&] { build_graph(4, dup); }), Errc::DuplicateEdge);
  EXPECT_EQ(code_of([&] { build_graph(4, range); }), Errc::OutOfRangeVertex);
  EXPECT_TRUE(throws([&] { build_graph(0, {}); }));
}

TEST(BuildGraph, ErrorNamesThePair) {
  std::vector<std::pair<Vertex, Vertex>> dup{{2, 3}, {3, 2}};
  try {
    build_graph(4, dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("(2,3)"), std::string::npos);
  }
}

TEST(ApplyEdits, AddChordAndIdentity) {
  Graph g = apply_edits(c4(), EditSet({Edge(0, 2)}, {}));
  EXPECT_EQ(g.m(), 5);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_EQ(apply_edits(c4(), EditSet()), c4());
}

TEST(ApplyEdits, RejectsInvalidEdits) {
  EXPECT_EQ(code_of([] { apply_edits(c4(), EditSet({Edge(0, 1)}, {})); }), Errc::AdditionAlreadyPresent);
  EXPECT_EQ(code_of([] { apply_edits(c4(), EditSet({}, {Edge(0, 2)})); }), Errc::RemovalAbsent);
  EXPECT_TRUE(throws([] { EditSet({Edge(0, 1)}, {Edge(1, 0)}); }));
}

TEST(ApplyEdits, InverseRestoresGraph) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = gnp_graph(8, 0.4, rng());
    std::vector<Edge> toggles;
    for (const Edge& e : all_pairs(8))
      if (rng() % 5 == 0) toggles.push_back(e);
    EditSet edits = EditSet::from_toggles(g, toggles);
    Graph h = apply_edits(g, edits);
    EXPECT_EQ(EditSet::difference(g, h), edits);
    EXPECT_EQ(static_cast<std::size_t>(edits.size()), toggles.size());
    EXPECT_EQ(apply_edits(h, edits.inverse()), g);
  }
}

TEST(Matrix, K2Propagation) {
  Eigen::MatrixXd p = matrix_of(complete_graph(2), MatrixKind::propagation);
  EXPECT_NEAR(p(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(p(0, 1), 0.5, 1e-15);
  EXPECT_NEAR(p(1, 0), 0.5, 1e-15);
  EXPECT_NEAR(p(1, 1), 0.5, 1e-15);
}

TEST(Matrix, SingleVertexAdjacency) {
  Eigen::MatrixXd a = matrix_of(Graph(1, std::vector<Edge>{}), MatrixKind::adjacency);
  ASSERT_EQ(a.rows(), 1);
  EXPECT_EQ(a(0, 0), 0.0);
}

TEST(Matrix, IsolatedVertexRejectedForNormalizedLaplacian) {
  Graph g(2, std::vector<Edge>{});
  EXPECT_EQ(code_of([&] { matrix_of(g, MatrixKind::normalized_laplacian); }), Errc::IsolatedVertex);
  EXPECT_FALSE(throws([&] { matrix_of(g, MatrixKind::propagation); }));
}

TEST(Matrix, KindsMatchDefinitions) {
  Graph g = gnp_graph(9, 0.5, 3);
  auto d = oracle::degrees(g);
  Eigen::MatrixXd a = oracle::adjacency(g);
  EXPECT_TRUE(matrix_of(g, MatrixKind::adjacency).isApprox(a));
  Eigen::MatrixXd deg = Eigen::MatrixXd::Zero(9, 9);
  for (int v = 0; v < 9; ++v) deg(v, v) = d[v];
  EXPECT_TRUE(matrix_of(g, MatrixKind::degree).isApprox(deg));
  EXPECT_TRUE(matrix_of(g, MatrixKind::combinatorial_laplacian).isApprox(deg - a));
  for (auto kind : {MatrixKind::adjacency, MatrixKind::propagation, MatrixKind::row_stochastic_propagation}) {
    EXPECT_TRUE(Eigen::MatrixXd(sparse_matrix_of(g, kind)).isApprox(matrix_of(g, kind)));
  }
}

TEST(Matrix, PropagationSymmetricAndRowStochasticVariant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gnp_graph(2 + static_cast<int>(rng() % 10), 0.4, rng());
    Eigen::MatrixXd p = matrix_of(g, MatrixKind::propagation);
    EXPECT_LE((p - p.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    Eigen::MatrixXd t = matrix_of(g, MatrixKind::row_stochastic_propagation);
    for (int i = 0; i < g.n(); ++i) EXPECT_NEAR(t.row(i).sum(), 1.0, 1e-12);
    Eigen::VectorXd ep = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(p).eigenvalues();
    Eigen::VectorXcd et = t.eigenvalues();
    std::vector<double> re;
    for (int i = 0; i < et.size(); ++i) {
      EXPECT_NEAR(et(i).imag(), 0.0, 1e-9);
      re.push_back(et(i).real());
    }
    std::sort(re.begin(), re.end());
    for (int i = 0; i < g.n(); ++i) EXPECT_NEAR(re[i], ep(i), 1e-9);
  }
}

TEST(Matrix, KindNamesRoundTrip) {
  for (auto kind : {MatrixKind::adjacency, MatrixKind::degree, MatrixKind::combinatorial_laplacian,
                    MatrixKind::normalized_laplacian, MatrixKind::propagation,
                    MatrixKind::row_stochastic_propagation}) {
    EXPECT_EQ(parse_matrix_kind(to_string(kind)), kind);
  }
  EXPECT_TRUE(throws([] { parse_matrix_kind("laplacian"); }));
}

TEST(Generators, Families) {
  EXPECT_EQ(complete_graph(4).m(), 6);
  Graph bb = barbell_graph(5);
  EXPECT_EQ(bb.n(), 10);
  EXPECT_EQ(bb.m(), 2 * 10 + 1);
  EXPECT_TRUE(bb.has_edge(4, 5));
  EXPECT_EQ(code_of([] { random_regular_graph(5, 3, 1); }), Errc::InfeasibleParameters);
  EXPECT_EQ(code_of([] { barbell_graph(2); }), Errc::InfeasibleParameters);
  EXPECT_EQ(code_of([] { gnp_graph(4, 1.5, 1); }), Errc::InfeasibleParameters);
}

TEST(Generators, DeterministicBySeed) {
  EXPECT_EQ(gnp_graph(12, 0.3, 99), gnp_graph(12, 0.3, 99));
  EXPECT_EQ(random_regular_graph(20, 3, 7), random_regular_graph(20, 3, 7));
}

TEST(Generators, RegularDegrees) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const int n = 2 * (4 + static_cast<int>(rng() % 12));
    Graph g = random_regular_graph(n, d, rng());
    for (Vertex v = 0; v < n; ++v) EXPECT_EQ(g.degree(v), d);
  }
}

TEST(GraphIO, ParseSmallest) {
  Graph g = parse_graph("2 1\n0 1\n");
  EXPECT_EQ(g, complete_graph(2));
  EXPECT_EQ(parse_graph("# comment\n3 2\n\n0 1\n# x\n2 1\n"), Graph(3, std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(GraphIO, ErrorsCarryLineNumbers) {
  try {
    parse_graph("2 1\n0 2\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MalformedEdgeLine);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { parse_graph("two 1\n0 1\n"); }), Errc::MalformedHeader);
  EXPECT_EQ(code_of([] { parse_graph("3 2\n0 1\n"); }), Errc::MalformedHeader);
  EXPECT_EQ(code_of([] { parse_graph("3 1\n0  1\n"); }), Errc::MalformedEdgeLine);
  EXPECT_EQ(code_of([] { parse_graph("3 1\n1 1\n"); }), Errc::MalformedEdgeLine);
  EXPECT_EQ(code_of([] { parse_graph("3 2\n0 1\n1 0\n"); }), Errc::MalformedEdgeLine);
}

TEST(GraphIO, RoundTripOnGeneratedGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = trial % 2 ? gnp_graph(1 + static_cast<int>(rng() % 20), 0.3, rng())
                        : random_regular_graph(2 * (3 + static_cast<int>(rng() % 8)), 3, rng());
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
  // Serialization of a parsed text is its canonical form.
  EXPECT_EQ(serialize_graph(parse_graph("3 2\n2 1\n1 0\n")), "3 2\n0 1\n1 2\n");
}
