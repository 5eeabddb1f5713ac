#include <gtest/gtest.h>

#include <functional>

#include "corpus.hpp"
#include "gemkit/colored_graph.hpp"
#include "gemkit/constructions.hpp"
#include "gemkit/error.hpp"
#include "oracles.hpp"

using namespace gemkit;
using fixtures::d3_gem;
using fixtures::s3_gem;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GemError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a GemError";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(FromMatchings, ValidGems) {
  auto s3 = s3_gem();
  EXPECT_FALSE(s3.has_boundary());
  auto st = vertex_stats(s3);
  EXPECT_EQ(st.p, 1);
  EXPECT_EQ(st.p_bar, 0);
  EXPECT_EQ(st.p_dot, 1);

  auto d3 = d3_gem();
  EXPECT_TRUE(d3.has_boundary());
  st = vertex_stats(d3);
  EXPECT_EQ(st.p, 1);
  EXPECT_EQ(st.p_bar, 1);
  EXPECT_EQ(st.p_dot, 0);
}

TEST(FromMatchings, RejectsInvariantViolations) {
  EXPECT_EQ(code_of([] { ColoredGraph::from_matchings(3, 4, {{{0, 1}}, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}, {}}); }),
            ErrorCode::non_perfect_matching);
  EXPECT_EQ(code_of([] { ColoredGraph::from_matchings(1, 2, {{{0, 0}}, {}}); }), ErrorCode::loop_edge);
  EXPECT_EQ(code_of([] { ColoredGraph::from_matchings(1, 2, {{{0, 2}}, {}}); }), ErrorCode::vertex_out_of_range);
  EXPECT_EQ(code_of([] { ColoredGraph::from_matchings(1, 4, {{{0, 1}, {1, 2}}, {}}); }), ErrorCode::duplicate_vertex);
  EXPECT_EQ(code_of([] { ColoredGraph::from_matchings(1, 4, {{{0, 1}, {2, 3}}, {}}); }), ErrorCode::disconnected);
  EXPECT_EQ(code_of([] { ColoredGraph::from_matchings(0, 2, {{{0, 1}}}); }), ErrorCode::dimension);
  EXPECT_EQ(code_of([] { ColoredGraph::from_matchings(1, 3, {{{0, 1}}, {}}); }), ErrorCode::invalid_argument);
  // The all-(0,1)/(2,3) closed gem is disconnected.
  EXPECT_EQ(code_of([] {
              ColoredGraph::from_matchings(3, 4, {{{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}});
            }),
            ErrorCode::disconnected);
}

TEST(FromMatchings, AllowsDisconnectedOnRequest) {
  auto g = ColoredGraph::from_matchings(1, 4, {{{0, 1}, {2, 3}}, {}}, Connectivity::allow_disconnected);
  EXPECT_FALSE(g.is_connected());
}

TEST(Residues, SpotValues) {
  EXPECT_EQ(residue_count(s3_gem(), {0, 1}), 1);
  EXPECT_EQ(residue_count(d3_gem(), {0, 3}), 1);
  EXPECT_EQ(residue_count(handlebody_orientable(1), {0, 1}), 2);
  EXPECT_EQ(residue_count(d3_gem(), {3}), 2);  // isolated vertices count
  EXPECT_EQ(cycle_count(s3_gem(), 0, 1), 1);
  EXPECT_EQ(cycle_count(d3_gem(), 0, 3), 0);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(cycle_count(handlebody_orientable(2), i, 3), 0);
  EXPECT_EQ(code_of([] { residue_count(s3_gem(), {4}); }), ErrorCode::invalid_color);
  EXPECT_EQ(code_of([] { cycle_count(s3_gem(), 1, 1); }), ErrorCode::invalid_color);
}

TEST(Residues, ComponentsNumberedBySmallestVertex) {
  auto labels = residue_components(fixtures::two_block(), {0, 1, 2});
  EXPECT_EQ(labels, (std::vector<int>{0, 0, 1, 1}));
  labels = residue_components(fixtures::two_block(), {3});
  EXPECT_EQ(labels, (std::vector<int>{0, 1, 1, 2}));
}

TEST(Bipartite, SpotValues) {
  EXPECT_TRUE(is_bipartite(s3_gem()));
  EXPECT_FALSE(is_bipartite(fixtures::rp2_gem()));
  EXPECT_FALSE(is_bipartite(handlebody_nonorientable(1)));
  EXPECT_TRUE(is_bipartite(handlebody_orientable(1)));
}

TEST(Contracted, SpotValues) {
  EXPECT_TRUE(is_contracted(s3_gem()));
  EXPECT_TRUE(is_boundary_contracted(d3_gem()));
  auto prod = product_with_interval(fixtures::rp2_gem());
  EXPECT_TRUE(is_boundary_contracted(prod));
  EXPECT_EQ(boundary_component_count(prod), 2);
  EXPECT_FALSE(is_boundary_contracted(fixtures::two_block()));
  EXPECT_EQ(code_of([] { is_boundary_contracted(s3_gem()); }), ErrorCode::closed_graph);
}

TEST(BoundaryGraph, SpotValues) {
  auto b = boundary_graph(d3_gem());
  EXPECT_EQ(b.graph, sphere_gem(2));
  EXPECT_EQ(b.h, 1);
  for (int n = 0; n <= 4; ++n) {
    auto bn = boundary_graph(handlebody_orientable(n));
    EXPECT_EQ(bn.h, 1);
    EXPECT_EQ(bn.graph.vertex_count(), 2 + 4 * n);
  }
  auto bp = boundary_graph(product_with_interval(fixtures::rp2_gem()));
  EXPECT_EQ(bp.h, 2);
  EXPECT_EQ(bp.component_vertices(0).size(), 4u);
  EXPECT_EQ(bp.component_vertices(1).size(), 4u);
  EXPECT_EQ(code_of([] { boundary_graph(s3_gem()); }), ErrorCode::closed_graph);
}

TEST(ComplexSummary, SpotValues) {
  auto s3 = complex_summary(s3_gem());
  EXPECT_EQ(s3.f_vector, (std::vector<long>{4, 6, 4, 2}));
  EXPECT_EQ(s3.euler_characteristic, 0);

  // Color 3 is empty, so the two triangles opposite the 3-labelled vertex
  // stay apart: f_2 = g_0 + g_1 + g_2 + g_3 = 1 + 1 + 1 + 2.
  auto d3 = complex_summary(d3_gem());
  EXPECT_EQ(d3.f_vector, (std::vector<long>{4, 6, 5, 2}));
  EXPECT_EQ(d3.euler_characteristic, 1);
  EXPECT_EQ(d3.f_vector, oracle::f_vector(oracle::from_graph(d3_gem())));

  auto prod = complex_summary(product_with_interval(fixtures::rp2_gem()));
  EXPECT_EQ(prod.f_vector[0], 7);
  EXPECT_EQ(prod.h, 2);
  EXPECT_TRUE(prod.crystallization_vertex_condition);
  auto st = vertex_stats(product_with_interval(fixtures::rp2_gem()));
  EXPECT_EQ(st.p, 8);
  EXPECT_EQ(st.p_bar, 4);
  EXPECT_EQ(st.p_dot, 4);
}

// Census values against the BFS / walk / face-gluing oracles on the corpus.
TEST(CensusProperties, MatchesOraclesOnCorpus) {
  for (const auto& [name, g] : fixtures::full_corpus()) {
    SCOPED_TRACE(name);
    auto e = oracle::from_graph(g);
    auto c = census(g);
    const int d = g.dim();
    for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
      std::vector<int> colors;
      for (int k = 0; k <= d; ++k)
        if ((mask >> k) & 1u) colors.push_back(k);
      ASSERT_EQ(c.residue_counts.at(ColorSet(mask)), oracle::components(e, colors));
    }
    for (int i = 0; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) ASSERT_EQ(c.cycles(i, j), oracle::cycles(e, i, j));
    auto summary = complex_summary(g);
    EXPECT_EQ(summary.f_vector, oracle::f_vector(e));
    EXPECT_EQ(summary.f_vector[d], g.vertex_count());
    EXPECT_EQ(is_bipartite(g), oracle::bipartite(e));
  }
}

TEST(CensusProperties, StatedIdentitiesOnRandomGems) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = 1 + trial % 4;
    const int vertices = 2 * (1 + trial % 7);
    auto g = fixtures::random_gem(dim, vertices, rng);
    auto c = census(g);
    auto st = vertex_stats(g);
    EXPECT_EQ(st.p, st.p_bar + st.p_dot);
    EXPECT_EQ(st.p_bar == 0, !g.has_boundary());
    for (int i = 0; i < dim; ++i) {
      EXPECT_EQ(c.g({i, dim}), st.p_bar + c.cycles(i, dim));
      for (int j = i + 1; j < dim; ++j) EXPECT_EQ(c.g({i, j}), c.cycles(i, j));
    }
    auto e = oracle::from_graph(g);
    EXPECT_EQ(complex_summary(g).f_vector, oracle::f_vector(e));
    if (g.has_boundary() && dim >= 2) {
      auto b = boundary_graph(g);
      EXPECT_EQ(b.graph.dim(), dim - 1);
      EXPECT_EQ(b.graph.vertex_count(), 2 * st.p_bar);
      for (int col = 0; col < dim; ++col)
        for (int v = 0; v < b.graph.vertex_count(); ++v) ASSERT_TRUE(b.graph.has_edge(col, v));
      auto expected = oracle::boundary(e);
      EXPECT_EQ(oracle::from_graph(b.graph).edges, expected.edges);
      EXPECT_GE(b.h, 1);
    }
  }
}

TEST(CensusProperties, BoundaryOfCorpus) {
  for (const auto& [name, g] : fixtures::boundary_corpus()) {
    SCOPED_TRACE(name);
    auto b = boundary_graph(g);
    auto e = oracle::boundary(oracle::from_graph(g));
    EXPECT_EQ(oracle::from_graph(b.graph).edges, e.edges);
    EXPECT_EQ(b.h, oracle::components(e, {0, 1, 2}));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) EXPECT_EQ(b.cycles(i, j), oracle::cycles(e, i, j));
    if (is_bipartite(g)) EXPECT_TRUE(is_bipartite(b.graph));
    auto summary = complex_summary(g);
    if (verify_boundary3(g).verdict) EXPECT_GE(summary.f_vector[0], 3L * std::max(1, b.h) + 1);
  }
}

TEST(ColorSet, Labels) {
  EXPECT_EQ(ColorSet({0, 1, 3}).label(), "013");
  EXPECT_EQ(ColorSet::all(3).size(), 4);
  EXPECT_EQ(ColorSet({2}).with(0).without(2), ColorSet({0}));
}
