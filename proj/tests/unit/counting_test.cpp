#include <gtest/gtest.h>

#include <random>

#include "cis/counting.hpp"
#include "cis/error.hpp"
#include "cis/families.hpp"
#include "cis/graph.hpp"

namespace cis {
namespace {

Graph random_connected(int n, std::mt19937_64& rng) {
  for (;;) {
    std::bernoulli_distribution coin(0.3);
    Graph g = Graph::empty(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) g = g.with_edge(i, j);
    if (is_connected(g)) return g;
  }
}

// Naive definition, independent of the library's counting code.
Count brute(const Graph& g, Mask must = 0) {
  Count total;
  for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
    if ((s & must) != must) continue;
    Mask seen = bit(std::countr_zero(s));
    for (;;) {
      Mask grow = seen;
      for (Vertex v : VertexSet(seen)) grow |= g.row(v) & s;
      if (grow == seen) break;
      seen = grow;
    }
    if (seen == s) total += 1;
  }
  return total;
}

TEST(Counting, FrozenSmallValues) {
  const Graph paw = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  EXPECT_EQ(count_cis(paw), Count(12));
  EXPECT_EQ(count_cis_rooted2(complete_graph(3), 0, 1), Count(2));
  EXPECT_EQ(count_cis_rooted2(cycle_graph(4), 0, 1), Count(4));
  EXPECT_EQ(count_cis_rooted(path_graph(3), 0), Count(3));
  EXPECT_EQ(count_cis(path_graph(5)), Count(15));
  EXPECT_EQ(count_cis(path_graph(6)), Count(21));
  EXPECT_EQ(count_cis(from_graph6("Bw")), Count(7));
}

TEST(Counting, ClosedFormsAgreeWithCounting) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(count_cis(path_graph(n)), closed_form(ClosedFormKind::Path, n)) << n;
    EXPECT_EQ(closed_form(ClosedFormKind::Path, n), Count(static_cast<std::uint64_t>(n * (n + 1) / 2)));
    EXPECT_EQ(count_cis(complete_graph(n)), closed_form(ClosedFormKind::Clique, n)) << n;
    if (n >= 3) {
      EXPECT_EQ(count_cis(cycle_graph(n)), closed_form(ClosedFormKind::Cycle, n)) << n;
      EXPECT_EQ(closed_form(ClosedFormKind::Cycle, n), Count(static_cast<std::uint64_t>(n * n - n + 1)));
    }
  }
  EXPECT_EQ(closed_form(ClosedFormKind::Clique, 32), Count((std::uint64_t{1} << 32) - 1));
  EXPECT_THROW(closed_form(ClosedFormKind::Cycle, 2), Error);
  EXPECT_THROW(closed_form(ClosedFormKind::Path, 0), Error);
}

TEST(Counting, SweepAndSplitAgreeWithBruteForce) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = random_connected(n, rng);
    const Count expected = brute(g);
    EXPECT_EQ(count_cis_by_sweep(g), expected) << to_graph6(g);
    EXPECT_EQ(count_cis_by_split(g), expected) << to_graph6(g);
    const Vertex u = static_cast<Vertex>(rng() % n);
    EXPECT_EQ(count_cis_rooted(g, u), brute(g, bit(u)));
    if (n >= 2) {
      const Vertex v = (u + 1 + static_cast<Vertex>(rng() % (n - 1))) % n;
      EXPECT_EQ(count_cis_rooted2(g, u, v), brute(g, bit(u) | bit(v)));
    }
  }
}

TEST(Counting, SplitHandlesOrdersAboveSweepThreshold) {
  EXPECT_EQ(count_cis(path_graph(30)), Count(465));
  EXPECT_EQ(count_cis(cycle_graph(32)), Count(32 * 32 - 32 + 1));
  const Graph g = build_double_tadpole(28, 3, 3);
  EXPECT_EQ(count_cis(g), double_tadpole_min_formula(28));
}

// N(G) = N(G - v) + N(G)_v for every vertex.
TEST(Counting, VertexSplitIdentity) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = random_connected(n, rng);
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(count_cis(g), count_cis(g.without_vertex(v)) + count_cis_rooted(g, v));
    }
  }
}

// Adding an edge never removes a connected induced subgraph.
TEST(Counting, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_connected(n, rng);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!g.has_edge(i, j)) EXPECT_GT(count_cis(g.with_edge(i, j)), count_cis(g));
  }
}

TEST(Counting, DisconnectedGraphsSumOverComponents) {
  const Graph g = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(count_cis(g), Count(6 + 7 + 1));
  EXPECT_EQ(count_cis(Graph::empty(5)), Count(5));
}

TEST(Counting, RootedErrors) {
  EXPECT_THROW(count_cis_rooted2(path_graph(3), 1, 1), Error);
  EXPECT_THROW(count_cis_rooted(path_graph(3), 5), Error);
}

TEST(Counting, WithinMasks) {
  const Graph g = complete_graph(6);
  EXPECT_EQ(count_cis_within(g, 0b000111), Count(7));
  EXPECT_EQ(count_cis_rooted_within(g, 0b000111, 1), Count(4));
}

TEST(CountType, ArithmeticAndOverflow) {
  EXPECT_EQ(pow2(10), Count(1024));
  EXPECT_EQ(binom2(5), Count(10));
  EXPECT_EQ(binom2(0), Count(0));
  EXPECT_EQ(power(Count(3), 4), Count(81));
  EXPECT_EQ((Count(5) - Count(3)).to_string(), "2");
  EXPECT_EQ(pow2(100).to_string(), "1267650600228229401496703205376");
  EXPECT_THROW(Count(1) - Count(2), Error);
  EXPECT_THROW(pow2(127) * Count(2), Error);
  EXPECT_THROW(pow2(64).to_u64(), Error);
  EXPECT_LT(Count(3), Count(4));
}

}  // namespace
}  // namespace cis
