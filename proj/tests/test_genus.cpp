#include <gtest/gtest.h>

#include "corpus.hpp"
#include "gemkit/constructions.hpp"
#include "gemkit/error.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/moves.hpp"
#include "oracles.hpp"

using namespace gemkit;
using fixtures::d3_gem;
using fixtures::s3_gem;

TEST(HalfInteger, Arithmetic) {
  auto half = HalfInteger::from_twice(1);
  EXPECT_EQ(half.to_string(), "1/2");
  EXPECT_EQ(HalfInteger::from_twice(-3).to_string(), "-3/2");
  EXPECT_EQ(HalfInteger(3).to_string(), "3");
  EXPECT_EQ(half + half, HalfInteger(1));
  EXPECT_EQ(3 * half, HalfInteger::from_twice(3));
  EXPECT_LT(half, HalfInteger(1));
  EXPECT_FALSE(half.is_integer());
}

TEST(CyclicPermutation, Validation) {
  EXPECT_NO_THROW(CyclicPermutation({2, 0, 1, 3}));
  EXPECT_THROW(CyclicPermutation({0, 1, 3, 2}), GemError);
  EXPECT_THROW(CyclicPermutation({0, 0, 1, 3}), GemError);
  auto all = CyclicPermutation::enumerate(3);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front().order(), (std::vector<Color>{0, 1, 2, 3}));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(CyclicPermutation({0, 1, 2, 3}).reversed().order(), (std::vector<Color>{2, 1, 0, 3}));
  EXPECT_THROW(euler_characteristic(fixtures::rp2_gem(), all.front()), GemError);
}

TEST(EulerCharacteristic, SpotValues) {
  for (const auto& eps : CyclicPermutation::enumerate(3)) {
    EXPECT_EQ(euler_characteristic(s3_gem(), eps), 2);
    EXPECT_EQ(euler_characteristic(d3_gem(), eps), 1);
    EXPECT_EQ(holes(s3_gem(), eps), 0);
    EXPECT_EQ(holes(d3_gem(), eps), 1);
    EXPECT_EQ(regular_genus_for(s3_gem(), eps), HalfInteger(0));
    EXPECT_EQ(regular_genus_for(d3_gem(), eps), HalfInteger(0));
    EXPECT_EQ(holes(product_with_interval(fixtures::rp2_gem()), eps), 2);
  }
  EXPECT_EQ(euler_characteristic(handlebody_orientable(1), CyclicPermutation({0, 1, 2, 3})), -1);
  EXPECT_EQ(regular_genus_for(fixtures::rp2_gem(), CyclicPermutation({0, 1, 2})), HalfInteger::from_twice(1));
}

TEST(RegularGenus, SpotValues) {
  auto s3 = regular_genus(s3_gem());
  EXPECT_EQ(s3.rho, HalfInteger(0));
  EXPECT_EQ(s3.rows.size(), 6u);
  for (const auto& row : s3.rows) EXPECT_EQ(row.chi, 2);
  EXPECT_EQ(regular_genus(handlebody_orientable(2)).rho, HalfInteger(2));
  auto sum = connected_sum(handlebody_orientable(1), 3, closed_seed(ClosedSeed::rp3), 0).graph;
  EXPECT_EQ(sum.vertex_count(), 14);
  EXPECT_EQ(regular_genus(sum).rho, HalfInteger(2));
  EXPECT_EQ(regular_genus(sum).rho.twice(), oracle::twice_min_rho(oracle::from_graph(sum)));
  EXPECT_THROW(regular_genus(ColoredGraph::from_matchings(1, 2, {{{0, 1}}, {}})), GemError);
}

TEST(RegularGenus, ArgminIsLexicographicallyFirst) {
  auto r = regular_genus(handlebody_orientable(1));
  const CyclicPermutation* first = nullptr;
  for (const auto& row : r.rows)
    if (row.rho == r.rho && (first == nullptr || row.eps < *first)) first = &row.eps;
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(r.argmin, *first);
}

TEST(RegularGenus, DistinctRowsDedupeByValue) {
  EXPECT_EQ(regular_genus(handlebody_orientable(1)).distinct_rows().size(), 1u);
  auto r = regular_genus(non_handlebody_sum(1, false, ClosedSeed::rp3));
  auto distinct = r.distinct_rows();
  EXPECT_GE(distinct.size(), 1u);
  EXPECT_LE(distinct.size(), 3u);
  for (const auto& row : r.rows) {
    int matches = 0;
    for (const auto& d : distinct) matches += (d.chi == row.chi && d.holes == row.holes) ? 1 : 0;
    EXPECT_EQ(matches, 1);
  }
}

TEST(GenusProperties, OracleAndInvariantsOnCorpus) {
  for (const auto& [name, g] : fixtures::full_corpus()) {
    SCOPED_TRACE(name);
    auto e = oracle::from_graph(g);
    auto r = regular_genus(g);
    EXPECT_EQ(r.rho.twice(), oracle::twice_min_rho(e));
    HalfInteger least = r.rows.front().rho;
    for (const auto& row : r.rows) {
      auto full = row.eps.order();
      EXPECT_EQ(row.rho.twice(), oracle::twice_rho(e, full));
      EXPECT_EQ(row.rho.twice(), 2 - row.chi - row.holes);
      EXPECT_EQ(row.chi, euler_characteristic(g, row.eps.reversed()));
      least = std::min(least, row.rho);
      if (!g.has_boundary()) {
        EXPECT_EQ(row.holes, 0);
        if (is_bipartite(g)) {
          EXPECT_TRUE(row.rho.is_integer());
          EXPECT_GE(row.rho, HalfInteger(0));
        }
      }
    }
    EXPECT_EQ(r.rho, least);
  }
}

TEST(GenusProperties, RandomGemsMatchOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = fixtures::random_gem(2 + trial % 3, 2 * (1 + trial % 6), rng);
    EXPECT_EQ(regular_genus(g).rho.twice(), oracle::twice_min_rho(oracle::from_graph(g)));
  }
}
