#include <gtest/gtest.h>

#include <random>

#include "cis/error.hpp"
#include "cis/graph.hpp"

namespace cis {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Overflow;
}

Graph random_graph(int n, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g = g.with_edge(i, j);
  return g;
}

TEST(Graph, Graph6KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(1)), "@");
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(from_graph6("Bg"), Graph::from_edge_list(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(from_graph6(">>graph6<<Bw\n"), complete_graph(3));
}

TEST(Graph, Graph6RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 32; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const Graph g = random_graph(n, rng);
      EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
    }
  }
}

TEST(Graph, Graph6RejectsGarbage) {
  EXPECT_EQ(kind_of([] { from_graph6(""); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { from_graph6("B"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { from_graph6("B!"); }), ErrorKind::ParseError);
}

TEST(Graph, ConstructorsValidate) {
  EXPECT_EQ(kind_of([] { Graph::from_edge_list(0, {}); }), ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([] { Graph::from_edge_list(33, {}); }), ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([] { Graph::from_edge_list(3, {{1, 1}}); }), ErrorKind::BadEdge);
  EXPECT_EQ(kind_of([] { Graph::from_edge_list(3, {{0, 3}}); }), ErrorKind::BadEdge);
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2);
}

TEST(Graph, EdgeListText) {
  const Graph g = parse_edge_list("# a path\n4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(g, path_graph(4));
  EXPECT_EQ(parse_edge_list(to_edge_list(cycle_graph(6))), cycle_graph(6));
  try {
    parse_edge_list("3\n0 1\n1 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Graph, CopyMutationsLeaveOriginalAlone) {
  const Graph p = path_graph(4);
  const Graph c = p.with_edge(0, 3);
  EXPECT_EQ(c, cycle_graph(4));
  EXPECT_EQ(p.edge_count(), 3);
  EXPECT_EQ(c.without_edge(0, 3), p);
  EXPECT_EQ(p.without_vertex(0), path_graph(3));
  EXPECT_EQ(p.with_vertices(2).order(), 6);
  EXPECT_EQ(complete_graph(5).induced(VertexSet::of({0, 2, 4})), complete_graph(3));
}

TEST(Graph, RelabelPreservesStructure) {
  const Graph p = path_graph(4);
  const std::vector<Vertex> order{1, 3, 0, 2};
  const Graph r = p.relabelled(order);
  EXPECT_EQ(r.edge_count(), 3);
  for (auto [a, b] : p.edges()) {
    const auto pos = [&](Vertex v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
    EXPECT_TRUE(r.has_edge(pos(a), pos(b)));
  }
}

TEST(Graph, CutVerticesAndBlocks) {
  const Graph paw = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  EXPECT_EQ(cut_vertices(paw), VertexSet::of({0}));
  EXPECT_EQ(pendant_vertices(paw), VertexSet::of({3}));
  const auto b = blocks(paw);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], VertexSet::of({0, 1, 2}));
  EXPECT_EQ(b[1], VertexSet::of({0, 3}));
  EXPECT_EQ(cut_vertices(path_graph(5)), VertexSet::of({1, 2, 3}));
  EXPECT_TRUE(cut_vertices(cycle_graph(5)).empty());
  EXPECT_EQ(kind_of([] { cut_vertices(Graph::empty(2)); }), ErrorKind::NotConnected);
  EXPECT_EQ(kind_of([] { blocks(complete_graph(1)); }), ErrorKind::TrivialGraph);
}

// Cut vertices against the definition: deleting v adds a component.
TEST(Graph, CutVerticesMatchDefinitionOnRandomGraphs) {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 300) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(n, rng, 0.35);
    if (!is_connected(g)) continue;
    ++checked;
    Mask expected = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (components(g.without_vertex(v)).size() > 1) expected |= bit(v);
    }
    EXPECT_EQ(cut_vertices(g).bits(), expected) << to_graph6(g);
    if (n >= 2) {
      Mask covered = 0;
      for (VertexSet b : blocks(g)) covered |= b.bits();
      EXPECT_EQ(covered, low_bits(n));
    }
  }
}

TEST(Graph, TwoConnectivity) {
  EXPECT_TRUE(is_two_connected(cycle_graph(5)));
  EXPECT_FALSE(is_two_connected(path_graph(5)));
  EXPECT_FALSE(is_two_connected(complete_graph(2)));
  EXPECT_TRUE(is_minimally_two_connected(cycle_graph(6)));
  EXPECT_FALSE(is_minimally_two_connected(complete_graph(4)));
  EXPECT_TRUE(is_minimally_two_connected(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  EXPECT_TRUE(is_tree(path_graph(6)));
  EXPECT_FALSE(is_tree(cycle_graph(6)));
}

TEST(Graph, IdentifyAndAttachPath) {
  const Graph g = identify(complete_graph(3), 2, complete_graph(2), 0);
  EXPECT_EQ(g.order(), 4);
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_EQ(identified_label(3, 2, 0, 1), 3);
  const Graph h = attach_path(complete_graph(3), 0, 3);
  EXPECT_EQ(h.order(), 5);
  EXPECT_TRUE(h.has_edge(0, 3));
  EXPECT_TRUE(h.has_edge(3, 4));
  EXPECT_EQ(attach_path(complete_graph(3), 1, 1), complete_graph(3));
}

}  // namespace
}  // namespace cis
