#pragma once

#include <array>
#include <bit>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cis {

inline constexpr int kMaxOrder = 32;

using Vertex = int;
using Mask = std::uint32_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }
constexpr Mask low_bits(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Subset of the vertices {0, ..., 31} of some graph, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<Vertex> vs) {
    Mask m = 0;
    for (Vertex v : vs) m |= bit(v);
    return VertexSet(m);
  }

  constexpr Mask bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  Vertex min() const { return std::countr_zero(bits_); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

  auto operator<=>(const VertexSet&) const = default;

 private:
  Mask bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, VertexSet s);

// Undirected simple graph of order at most kMaxOrder, stored as one adjacency
// bitmask per vertex. Values are immutable; every "mutation" returns a copy.
//
// Order 0 (the null graph) is representable so that vertex deletion is total,
// but the public constructors reject it.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices, 0 <= n <= kMaxOrder.
  static Graph empty(int n);

  // Throws OrderOutOfRange for n outside [1, 32], BadEdge for a loop or an
  // endpoint >= n. Duplicate pairs are merged.
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  // Rows must already be symmetric and loop-free; checked.
  static Graph from_adjacency(int n, std::span<const Mask> rows);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return VertexSet(low_bits(n_)); }
  VertexSet neighbours(Vertex v) const { return VertexSet(adj_[v]); }
  Mask row(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  // Appends `count` isolated vertices labelled n, n+1, ...
  Graph with_vertices(int count) const;
  // Deletes v; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const;
  // Subgraph induced by s, relabelled 0..|s|-1 in increasing vertex order.
  Graph induced(VertexSet s) const;
  // order[k] is the old vertex that receives label k; must be a permutation.
  Graph relabelled(std::span<const Vertex> order) const;

  auto operator<=>(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<Mask, kMaxOrder> adj_{};
};

// Named graphs used throughout.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// graph6 interchange (bit-exact, orders up to 32). from_graph6 accepts an
// optional ">>graph6<<" header and surrounding whitespace.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text: first non-blank line "n", then one "i j" pair per line.
// Lines starting with '#' are ignored. ParseError messages carry the line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

bool is_connected(const Graph& g);
// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
// Whether the subgraph induced by s is connected (the empty set is not).
bool induces_connected(const Graph& g, Mask s);

// Lowpoint-based. Throws NotConnected for a disconnected graph.
VertexSet cut_vertices(const Graph& g);
VertexSet pendant_vertices(const Graph& g);

// Block decomposition, sorted by smallest member vertex. Throws NotConnected
// or TrivialGraph (order 1).
std::vector<VertexSet> blocks(const Graph& g);

// Connected, order >= 3 and free of cut vertices.
bool is_two_connected(const Graph& g);
bool is_minimally_two_connected(const Graph& g);
bool is_tree(const Graph& g);

// Disjoint union with u in g1 and v in g2 merged. g1 keeps its labels (the
// merged vertex is u); g2's other vertices follow in increasing order.
Graph identify(const Graph& g1, Vertex u, const Graph& g2, Vertex v);
// Position of g2's vertex w inside identify(g1, u, g2, v).
Vertex identified_label(int order1, Vertex u, Vertex v, Vertex w);

// Hangs a path with k-1 new vertices from v; k == 1 is the identity.
Graph attach_path(const Graph& g, Vertex v, int k);

}  // namespace cis
