#include "cis/counting.hpp"

#include "cis/error.hpp"

namespace cis {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorKind::BadEdge, "vertex " + std::to_string(v) + " not in graph");
  }
}

// Counts connected sets S with set ⊆ S ⊆ allowed \ excluded that can be grown
// from `set` by repeatedly adding a neighbour. Branches on the lowest
// candidate neighbour: either it joins S or it is excluded for good, so every
// connected superset is reached exactly once.
std::uint64_t grow(const Graph& g, Mask set, Mask nbrs, Mask blocked) {
  const Mask cand = nbrs & ~set & ~blocked;
  if (cand == 0) return 1;
  const Vertex v = std::countr_zero(cand);
  return grow(g, set | bit(v), nbrs | g.row(v), blocked) + grow(g, set, nbrs, blocked | bit(v));
}

std::uint64_t rooted_within(const Graph& g, Mask allowed, Vertex u) {
  return grow(g, bit(u), g.row(u), ~allowed);
}

}  // namespace

Count count_cis_within(const Graph& g, Mask allowed) {
  allowed &= g.vertices().bits();
  std::uint64_t total = 0;
  // Every connected set is counted once, at its highest vertex.
  for (Vertex v : VertexSet(allowed)) total += rooted_within(g, allowed & low_bits(v + 1), v);
  return Count(total);
}

Count count_cis_rooted_within(const Graph& g, Mask allowed, Vertex u) {
  check_vertex(g, u);
  if (!(allowed & bit(u))) throw Error(ErrorKind::BadEdge, "root outside the allowed set");
  return Count(rooted_within(g, allowed & g.vertices().bits(), u));
}

Count count_cis_by_sweep(const Graph& g) {
  const Mask all = g.vertices().bits();
  std::uint64_t total = 0;
  for (Mask s = all; s != 0; s = (s - 1) & all) {
    if (induces_connected(g, s)) ++total;
  }
  return Count(total);
}

Count count_cis_by_split(const Graph& g) { return count_cis_within(g, g.vertices().bits()); }

Count count_cis(const Graph& g) {
  return g.order() <= kSweepThreshold ? count_cis_by_sweep(g) : count_cis_by_split(g);
}

Count count_cis_rooted(const Graph& g, Vertex u) {
  check_vertex(g, u);
  return Count(rooted_within(g, g.vertices().bits(), u));
}

Count count_cis_rooted2(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw Error(ErrorKind::SameVertex, "rooted pair needs two distinct vertices");
  const Mask all = g.vertices().bits();
  return Count(rooted_within(g, all, u) - rooted_within(g, all & ~bit(v), u));
}

Count closed_form(ClosedFormKind kind, int n) {
  if (n < 1) throw Error(ErrorKind::BadOrder, "order must be positive");
  const auto nn = static_cast<std::uint64_t>(n);
  switch (kind) {
    case ClosedFormKind::Path:
      return Count(nn * (nn + 1) / 2);
    case ClosedFormKind::Cycle:
      if (n < 3) throw Error(ErrorKind::BadOrder, "a cycle needs at least 3 vertices");
      return Count(nn * nn - nn + 1);
    case ClosedFormKind::Clique:
      return pow2(n) - Count(1);
  }
  return Count{};
}

}  // namespace cis
