#include <gtest/gtest.h>

#include <functional>

#include "corpus.hpp"
#include "gemkit/constructions.hpp"
#include "gemkit/error.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/recognition.hpp"
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

std::vector<int> as_ints(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ConnectedSum, SpotValues) {
  auto s = connected_sum(s3_gem(), 0, s3_gem(), 0);
  EXPECT_EQ(s.graph, s3_gem());
  EXPECT_TRUE(s.unwelded_colors.empty());

  auto sum = connected_sum(handlebody_orientable(1), 3, closed_seed(ClosedSeed::rp3), 0);
  EXPECT_EQ(sum.graph.vertex_count(), 14);
  EXPECT_TRUE(sum.warnings.empty());

  auto dd = connected_sum(d3_gem(), 0, d3_gem(), 0);
  EXPECT_EQ(dd.graph, d3_gem());
  EXPECT_EQ(dd.unwelded_colors, (std::vector<Color>{3}));
  EXPECT_FALSE(dd.warnings.empty());  // neither vertex is interior

  EXPECT_EQ(code_of([] { connected_sum(d3_gem(), 0, s3_gem(), 0); }), ErrorCode::color_mismatch);
  EXPECT_EQ(code_of([] { connected_sum(d3_gem(), 0, fixtures::rp2_gem(), 0); }), ErrorCode::dimension);
  EXPECT_EQ(code_of([] { connected_sum(d3_gem(), 5, d3_gem(), 0); }), ErrorCode::vertex_out_of_range);
}

TEST(ConnectedSum, OpenWeldLeavesBoundaryVertex) {
  auto seed = closed_seed(ClosedSeed::rp3);
  auto open = connected_sum(d3_gem(), 0, seed, 0, WeldMode::open_boundary);
  EXPECT_EQ(open.graph.vertex_count(), 8);
  EXPECT_EQ(open.unwelded_colors, (std::vector<Color>{3}));
  EXPECT_EQ(vertex_stats(open.graph).p_bar, 1);
}

// Vertex 6 of g1 shares colors 0,1,2 with vertex 4, and vertex 1 of the
// two-block graph shares them with vertex 0, so the weld isolates {4, 0'}.
TEST(ConnectedSum, RefusesDisconnectingWeld) {
  auto g1 = ColoredGraph::from_matchings(3, 8,
                                         {{{0, 2}, {1, 3}, {4, 6}, {5, 7}},
                                          {{0, 5}, {1, 3}, {2, 7}, {4, 6}},
                                          {{0, 1}, {2, 7}, {3, 5}, {4, 6}},
                                          {{6, 7}}});
  auto g2 = fixtures::two_block();
  const auto welded = oracle::welded_sum(oracle::from_graph(g1), 6, oracle::from_graph(g2), 1);
  EXPECT_EQ(oracle::components(welded, {0, 1, 2, 3}), 2);
  EXPECT_EQ(code_of([&] { connected_sum(g1, 6, g2, 1); }), ErrorCode::disconnected);
  // Every other pair: refuse exactly when the hand weld splits.
  int built = 0;
  for (Vertex a = 0; a < g1.vertex_count(); ++a)
    for (Vertex b = 0; b < g2.vertex_count(); ++b) {
      if (g1.is_boundary_vertex(a) != g2.is_boundary_vertex(b)) continue;
      const auto w = oracle::welded_sum(oracle::from_graph(g1), a, oracle::from_graph(g2), b);
      if (oracle::components(w, {0, 1, 2, 3}) > 1) {
        EXPECT_EQ(code_of([&] { connected_sum(g1, a, g2, b); }), ErrorCode::disconnected) << a << "," << b;
      } else {
        EXPECT_EQ(connected_sum(g1, a, g2, b).graph.vertex_count(), 10) << a << "," << b;
        ++built;
      }
    }
  EXPECT_GT(built, 0);
}

TEST(ConnectedSum, RelabelingMapsAreDense) {
  for (int v1 = 0; v1 < 8; ++v1) {
    auto r = connected_sum(handlebody_orientable(1), 3, closed_seed(ClosedSeed::s2xs1), v1);
    std::vector<int> hits(r.graph.vertex_count(), 0);
    for (auto v : r.first_map)
      if (v != kNoPartner) ++hits[v];
    for (auto v : r.second_map)
      if (v != kNoPartner) ++hits[v];
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_EQ(r.first_map[3], kNoPartner);
    EXPECT_EQ(r.second_map[v1], kNoPartner);
  }
}

TEST(Dipoles, FindSites) {
  EXPECT_TRUE(find_1_dipoles(s3_gem()).empty());
  EXPECT_TRUE(find_1_dipoles(handlebody_orientable(1)).empty());
  auto sites = find_1_dipoles(fixtures::two_block());
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0], (DipoleSite{1, 2, 3}));
}

TEST(Dipoles, CancelSpotValues) {
  auto r = cancel_1_dipole(fixtures::two_block(), {1, 2, 3});
  EXPECT_EQ(r.graph, d3_gem());
  EXPECT_EQ(as_ints(r.relabel), (std::vector<int>{0, -1, -1, 1}));
  EXPECT_EQ(code_of([] { cancel_1_dipole(s3_gem(), {0, 1, 0}); }), ErrorCode::invalid_site);
  EXPECT_EQ(code_of([] { cancel_1_dipole(fixtures::two_block(), {0, 2, 3}); }), ErrorCode::invalid_site);
}

// Site (1,5) on color 0 has one boundary endpoint; cancelling it would split
// the graph, so it is neither listed nor accepted.
TEST(Dipoles, MixedBoundarySiteRejected) {
  auto g = ColoredGraph::from_matchings(
      3, 6, {{{0, 4}, {1, 5}, {2, 3}}, {{0, 4}, {1, 2}, {3, 5}}, {{0, 4}, {1, 2}, {3, 5}}, {{4, 5}}});
  for (const auto& s : find_1_dipoles(g))
    EXPECT_EQ(g.is_boundary_vertex(s.x), g.is_boundary_vertex(s.y)) << s.x << "," << s.y;
  EXPECT_EQ(code_of([&] { cancel_1_dipole(g, {1, 5, 0}); }), ErrorCode::invalid_site);
}

TEST(Dipoles, ReducePipeline) {
  std::mt19937 rng(3);
  auto g = fixtures::with_random_dipoles(handlebody_orientable(2), 4, rng);
  int before = g.vertex_count();
  auto r = cancel_all_1_dipoles(g);
  EXPECT_EQ(r.graph.vertex_count(), before - 2 * static_cast<int>(r.cancelled.size()));
  EXPECT_TRUE(find_1_dipoles(r.graph).empty());
  auto v = verify_boundary3(r.graph);
  EXPECT_TRUE(v.verdict);
  EXPECT_TRUE(is_handlebody(r.graph).handlebody);
  // Step by step: -2 vertices and a valid gem every time.
  auto cur = g;
  while (true) {
    auto sites = find_1_dipoles(cur);
    if (sites.empty()) break;
    auto next = cancel_1_dipole(cur, sites.front()).graph;
    EXPECT_EQ(next.vertex_count(), cur.vertex_count() - 2);
    EXPECT_TRUE(next.is_connected());
    cur = next;
  }
  EXPECT_EQ(cur, r.graph);
}

TEST(Dipoles, DoubleInsertIntoD3ReducesBack) {
  auto g = insert_1_dipole(d3_gem(), 0, 1).graph;
  g = insert_1_dipole(g, 3, 2).graph;
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(cancel_all_1_dipoles(g).graph, d3_gem());
}

// Inserting then cancelling the new site restores the matchings exactly up
// to the returned relabeling.
TEST(Dipoles, InsertCancelRoundTrip) {
  std::mt19937 rng(42);
  auto corpus = fixtures::full_corpus();
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& base = corpus[pick(rng)].graph;
    std::uniform_int_distribution<int> vert(0, base.vertex_count() - 1), col(0, base.dim());
    const int v = vert(rng), c = col(rng);
    auto ins = insert_1_dipole(base, v, c);
    ASSERT_EQ(ins.graph.vertex_count(), base.vertex_count() + 2);
    const int x = base.vertex_count(), y = x + 1;
    auto sites = find_1_dipoles(ins.graph);
    const DipoleSite site{x, y, c};
    ASSERT_NE(std::find(sites.begin(), sites.end(), site), sites.end());
    auto back = cancel_1_dipole(ins.graph, site);
    ASSERT_EQ(back.graph.vertex_count(), base.vertex_count());
    std::vector<int> map(base.vertex_count());
    for (int u = 0; u < base.vertex_count(); ++u) map[u] = back.relabel[u];
    EXPECT_EQ(oracle::relabeled(oracle::from_graph(base), map),
              oracle::relabeled(oracle::from_graph(back.graph), [&] {
                std::vector<int> id(back.graph.vertex_count());
                std::iota(id.begin(), id.end(), 0);
                return id;
              }()));
    EXPECT_EQ(regular_genus(ins.graph).rho, regular_genus(base).rho);
  }
}

TEST(Join, SpotValues) {
  auto prod = product_with_interval(fixtures::rp2_gem());
  auto j = join_boundary_components(prod);
  EXPECT_EQ(j.added_edges.size(), 1u);
  EXPECT_EQ(j.graph.vertex_count(), prod.vertex_count());
  EXPECT_EQ(regular_genus(j.graph).rho, regular_genus(prod).rho + HalfInteger(1));
  EXPECT_EQ(boundary_component_count(j.graph), 1);

  auto torus = product_with_interval(fixtures::torus_gem());
  EXPECT_EQ(torus.vertex_count(), 24);
  auto jt = join_boundary_components(torus);
  EXPECT_EQ(jt.graph.vertex_count(), 24);
  auto b0 = boundary_graph(torus), b1 = boundary_graph(jt.graph);
  EXPECT_EQ(b1.h, 1);
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k) EXPECT_EQ(b1.cycles(i, k), b0.cycles(i, k) - 1);

  EXPECT_EQ(code_of([] { join_boundary_components(d3_gem()); }), ErrorCode::connected_boundary);
  EXPECT_EQ(code_of([] { join_boundary_components(s3_gem()); }), ErrorCode::closed_graph);
}

TEST(Join, PostconditionsOnCorpus) {
  for (const auto& [name, g] : fixtures::boundary_corpus()) {
    const int h = boundary_component_count(g);
    if (h < 2) continue;
    SCOPED_TRACE(name);
    auto j = join_boundary_components(g);
    EXPECT_EQ(static_cast<int>(j.added_edges.size()), h - 1);
    auto c0 = census(g), c1 = census(j.graph);
    auto b0 = boundary_graph(g), b1 = boundary_graph(j.graph);
    EXPECT_EQ(b1.h, 1);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(c1.cycles(i, 3), c0.cycles(i, 3));
      for (int k = i + 1; k < 3; ++k) {
        EXPECT_EQ(c1.g({i, k}), c0.g({i, k}));
        EXPECT_EQ(b1.cycles(i, k), b0.cycles(i, k) - (h - 1));
      }
    }
    EXPECT_EQ(regular_genus(j.graph).rho, regular_genus(g).rho + HalfInteger(h - 1));
  }
}
