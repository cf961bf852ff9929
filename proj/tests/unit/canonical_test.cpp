#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cis/canonical.hpp"
#include "cis/families.hpp"
#include "cis/graph.hpp"

namespace cis {
namespace {

Graph graph_from_bits(int n, std::uint64_t bits) {
  Graph g = Graph::empty(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((bits >> k) & 1U) g = g.with_edge(i, j);
  return g;
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return g.relabelled(order);
}

bool isomorphic_by_permutations(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> order(a.order());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (a.relabelled(order) == b) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// All graphs (connected or not) on n vertices up to isomorphism.
constexpr int kAllGraphClasses[] = {0, 1, 2, 4, 11, 34, 156};

TEST(Canonical, CompleteInvariantUpToOrderSix) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> forms;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      const Graph g = graph_from_bits(n, bits);
      const std::string form = canonical_form(g);
      forms.insert(form);
      if (bits % 7 == 0) EXPECT_EQ(canonical_form(shuffled(g, rng)), form) << to_graph6(g);
    }
    EXPECT_EQ(forms.size(), static_cast<std::size_t>(kAllGraphClasses[n])) << n;
  }
}

TEST(Canonical, LabelingReproducesCanonicalGraph) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = graph_from_bits(n, rng());
    const CanonicalLabeling lab = canonical_labeling(g);
    EXPECT_EQ(g.relabelled(lab.order), lab.graph);
    EXPECT_EQ(canonical_graph(shuffled(g, rng)), lab.graph);
    EXPECT_EQ(canonical_form(g), to_graph6(lab.graph));
  }
}

TEST(Canonical, AgreesWithPermutationSearchAtOrderSeven) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph a = graph_from_bits(7, rng());
    // Half the pairs are relabelled copies; the rest move one edge, keeping
    // the edge count so the degree check alone cannot decide.
    Graph b = shuffled(a, rng);
    if (rep % 2 && b.edge_count() > 0 && b.edge_count() < 21) {
      const auto edges = b.edges();
      std::vector<std::pair<Vertex, Vertex>> non_edges;
      for (Vertex i = 0; i < 7; ++i)
        for (Vertex j = i + 1; j < 7; ++j)
          if (!b.has_edge(i, j)) non_edges.emplace_back(i, j);
      const auto [x, y] = edges[rng() % edges.size()];
      const auto [p, q] = non_edges[rng() % non_edges.size()];
      b = b.without_edge(x, y).with_edge(p, q);
    }
    EXPECT_EQ(are_isomorphic(a, b), isomorphic_by_permutations(a, b)) << to_graph6(a) << ' ' << to_graph6(b);
  }
}

TEST(Canonical, HighlySymmetricGraphs) {
  std::mt19937_64 rng(4);
  const std::vector<Graph> graphs{complete_graph(12), cycle_graph(12), Graph::empty(10),
                                  build_double_tadpole(12, 4, 4), build_t2(12, 5)};
  for (const Graph& g : graphs) {
    for (int rep = 0; rep < 5; ++rep) EXPECT_EQ(canonical_form(shuffled(g, rng)), canonical_form(g));
  }
  // Petersen graph against the pentagonal prism: same degree sequence.
  const Graph petersen = Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                    {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const Graph prism = Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                 {3, 8}, {4, 9}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
  EXPECT_FALSE(are_isomorphic(petersen, prism));
  EXPECT_TRUE(are_isomorphic(petersen, shuffled(petersen, rng)));
}

}  // namespace
}  // namespace cis
