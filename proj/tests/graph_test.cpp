#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "speclap/eigen.hpp"
#include "speclap/graph.hpp"

namespace speclap {
namespace {

template <typename F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Graph, RejectsAsymmetricWeights) {
  Matrix w = Matrix::Zero(3, 3);
  w(0, 1) = 1.0;
  EXPECT_EQ(error_kind_of([&] { Graph g(w); }), ErrorKind::NotSymmetric);
}

TEST(Graph, RejectsNonZeroDiagonal) {
  Matrix w = Matrix::Zero(2, 2);
  w(1, 1) = 0.5;
  EXPECT_EQ(error_kind_of([&] { Graph g(w); }), ErrorKind::NonZeroDiagonal);
}

TEST(Graph, RejectsEmptyAndNonSquare) {
  EXPECT_EQ(error_kind_of([] { Graph g(Matrix(0, 0)); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(error_kind_of([] { Graph g(Matrix::Zero(2, 3)); }), ErrorKind::InvalidArgument);
}

TEST(Graph, SymmetrizeAverages) {
  Matrix w = Matrix::Zero(2, 2);
  w(0, 1) = 2.0;
  const Graph g = symmetrize(w);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(g.weight(1, 0), 1.0);
}

TEST(Graph, EdgesAreNonZeroEntries) {
  const Graph g = testing::four_node();
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_FALSE(g.has_negative_edges());
  EXPECT_TRUE(testing::signed_g1().has_negative_edges());
}

TEST(NodeSubset, ValidatesMembers) {
  EXPECT_EQ(error_kind_of([] { NodeSubset s(3, {0, 3}); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(error_kind_of([] { NodeSubset s(3, {1, 1}); }), ErrorKind::InvalidArgument);
  const NodeSubset s(4, {0, 3});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.complement().members(), (std::vector<std::size_t>{1, 2}));
}

TEST(Degree, FiveNodeGraph) {
  const Vector d = degree_vector(testing::five_node());
  EXPECT_EQ(d, (Vector(5) << 2, 4, 3, 3, 2).finished());
}

TEST(Degree, FourNodeGraph) {
  EXPECT_EQ(degree_vector(testing::four_node()), (Vector(4) << 12, 6, 9, 9).finished());
}

TEST(Degree, EmptyGraph) { EXPECT_EQ(degree_vector(Graph(Matrix::Zero(3, 3))), Vector::Zero(3)); }

TEST(Degree, SignedUsesAbsoluteWeights) {
  const Graph g = testing::signed_g1();
  const Vector expected = testing::signed_g1_laplacian().diagonal();
  EXPECT_EQ(degree_vector(g, GraphKind::signed_graph), expected);
  EXPECT_NE(degree_vector(g), expected);
}

TEST(Volume, FourNodeGraph) {
  const Graph g = testing::four_node();
  EXPECT_DOUBLE_EQ(volume(g, NodeSubset::all(4)), 36.0);
  EXPECT_DOUBLE_EQ(volume(g, NodeSubset(4, {})), 0.0);
  EXPECT_DOUBLE_EQ(volume(g, NodeSubset(4, {0})), 12.0);
}

TEST(Links, FourNodeGraph) {
  const Graph g = testing::four_node();
  const NodeSubset a(4, {0});
  const NodeSubset b(4, {2});
  EXPECT_DOUBLE_EQ(links(g, a, b), 6.0);
  EXPECT_DOUBLE_EQ(links(g, b, a), 6.0);
  const NodeSubset ab(4, {0, 1});
  EXPECT_DOUBLE_EQ(links(g, ab, NodeSubset::all(4)), volume(g, ab));
  EXPECT_DOUBLE_EQ(links(g, ab, NodeSubset::all(4), SignFilter::negative_only), 0.0);
  EXPECT_DOUBLE_EQ(links(g, ab, NodeSubset::all(4), SignFilter::positive_only), volume(g, ab));
}

TEST(Links, SignFiltersSplitMass) {
  const Graph g = testing::signed_g2();
  const NodeSubset a(9, {0, 1, 2, 3});
  const NodeSubset b(9, {1, 4, 5, 7});
  const double pos = links(g, a, b, SignFilter::positive_only);
  const double neg = links(g, a, b, SignFilter::negative_only);
  EXPECT_GE(neg, 0.0);
  EXPECT_NEAR(links(g, a, b), pos - neg, 1e-15);
}

TEST(Cut, FourNodeGraph) {
  const Graph g = testing::four_node();
  EXPECT_DOUBLE_EQ(cut(g, NodeSubset::all(4)), 0.0);
  EXPECT_DOUBLE_EQ(cut(g, NodeSubset(4, {0})), 12.0);
  EXPECT_DOUBLE_EQ(cut(g, NodeSubset(4, {0, 3})), 15.0);
  EXPECT_DOUBLE_EQ(cut(g, NodeSubset(4, {1, 2})), 15.0);
  const NodeSubset a(4, {0, 3});
  EXPECT_DOUBLE_EQ(cut(g, a) + assoc(g, a), volume(g, a));
}

TEST(Cut, SignedUsesAbsoluteWeights) {
  Matrix w = Matrix::Zero(3, 3);
  w(0, 1) = w(1, 0) = -2.0;
  w(1, 2) = w(2, 1) = 1.0;
  const Graph g(w);
  EXPECT_DOUBLE_EQ(cut(g, NodeSubset(3, {1}), GraphKind::signed_graph), 3.0);
  EXPECT_DOUBLE_EQ(cut(g, NodeSubset(3, {1})), -1.0);
}

TEST(Components, Counts) {
  EXPECT_EQ(connected_components(testing::five_node()).count, 1u);
  const Components empty = connected_components(Graph(Matrix::Zero(3, 3)));
  EXPECT_EQ(empty.count, 3u);
  EXPECT_EQ(empty.label, (std::vector<std::size_t>{1, 2, 3}));
  const Components two = connected_components(testing::cliques({3, 2}));
  EXPECT_EQ(two.count, 2u);
  EXPECT_EQ(two.label, (std::vector<std::size_t>{1, 1, 1, 2, 2}));
}

TEST(Components, LabelsFollowFirstVisit) {
  Matrix w = Matrix::Zero(4, 4);
  w(0, 3) = w(3, 0) = 1.0;
  const Components c = connected_components(Graph(w));
  EXPECT_EQ(c.label, (std::vector<std::size_t>{1, 2, 3, 1}));
}

TEST(Orient, LexicographicEdges) {
  const OrientedGraph og = orient(testing::four_node());
  const std::vector<OrientedEdge> expected{{0, 1, 3}, {0, 2, 6}, {0, 3, 3}, {1, 3, 3}, {2, 3, 3}};
  EXPECT_EQ(og.edges, expected);
  EXPECT_EQ(orient(testing::path(2)).edges, (std::vector<OrientedEdge>{{0, 1, 1}}));
  EXPECT_TRUE(orient(Graph(Matrix::Zero(3, 3))).edges.empty());
}

TEST(Incidence, MatchesPrintedMatrix) {
  const Matrix b = incidence_matrix(orient(testing::four_node()));
  EXPECT_LT((b - testing::four_node_incidence()).cwiseAbs().maxCoeff(), 5e-5);
  EXPECT_DOUBLE_EQ(b(0, 0), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(b(0, 1), std::sqrt(6.0));
}

TEST(Incidence, SingleEdges) {
  EXPECT_EQ(incidence_matrix(orient(testing::path(2))), (Matrix(2, 1) << 1, -1).finished());
  Matrix w = Matrix::Zero(2, 2);
  w(0, 1) = w(1, 0) = -1.0;
  const OrientedGraph og = orient(Graph(w));
  EXPECT_EQ(incidence_matrix(og, GraphKind::signed_graph), (Matrix(2, 1) << 1, 1).finished());
  EXPECT_EQ(error_kind_of([&] { incidence_matrix(og); }), ErrorKind::NegativeWeight);
}

TEST(Incidence, ProductIsLaplacian) {
  const Graph g = testing::four_node();
  const Matrix b = incidence_matrix(orient(g));
  const Matrix expected = Matrix(degree_vector(g).asDiagonal()) - g.weights();
  EXPECT_LT((b * b.transpose() - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((b.transpose() * Vector::Ones(4)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Incidence, SignedProductIsSignedLaplacian) {
  const Graph g = testing::signed_g2();
  const Matrix b = incidence_matrix(orient(g), GraphKind::signed_graph);
  EXPECT_LT((b * b.transpose() - testing::signed_g2_laplacian()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Incidence, UnorientedVariantGivesSignlessLaplacian) {
  // 0/1 node-edge incidence without orientation: B B^T = D + A.
  const Graph g = testing::five_node();
  const OrientedGraph og = orient(g);
  Matrix b = Matrix::Zero(5, static_cast<Eigen::Index>(og.edges.size()));
  for (std::size_t e = 0; e < og.edges.size(); ++e) {
    b(static_cast<Eigen::Index>(og.edges[e].source), static_cast<Eigen::Index>(e)) = 1.0;
    b(static_cast<Eigen::Index>(og.edges[e].target), static_cast<Eigen::Index>(e)) = 1.0;
  }
  const Matrix expected = Matrix(degree_vector(g).asDiagonal()) + adjacency_matrix(g);
  EXPECT_EQ(b * b.transpose(), expected);
}

TEST(Incidence, RankCountsComponents) {
  const Graph g = testing::cliques({3, 4, 2});
  const Matrix b = incidence_matrix(orient(g));
  EXPECT_EQ(numerical_rank(b), static_cast<Eigen::Index>(g.size() - connected_components(g).count));
}

TEST(Adjacency, Patterns) {
  const Matrix a5 = adjacency_matrix(testing::five_node());
  EXPECT_EQ(a5, testing::five_node().weights());
  EXPECT_EQ(adjacency_matrix(Graph(Matrix::Zero(3, 3))), Matrix::Zero(3, 3));
  EXPECT_EQ(adjacency_matrix(testing::four_node()),
            testing::rows({{0, 1, 1, 1}, {1, 0, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 0}}));
}

}  // namespace
}  // namespace speclap
