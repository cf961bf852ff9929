#pragma once

#include "cis/count.hpp"
#include "cis/graph.hpp"

namespace cis {

// Graphs of at most this order are counted by sweeping all 2^n - 1 subsets;
// larger ones use the vertex split N(G) = N(G - v) + N(G)_v.
inline constexpr int kSweepThreshold = 24;

// Number of nonempty vertex subsets inducing a connected subgraph. On a
// disconnected graph this is the sum over its components.
Count count_cis(const Graph& g);

// The two algorithms behind count_cis, exposed so they can be cross-checked.
Count count_cis_by_sweep(const Graph& g);
Count count_cis_by_split(const Graph& g);

// Connected induced subgraphs containing u.
Count count_cis_rooted(const Graph& g, Vertex u);
// ... containing both u and v. Throws SameVertex when u == v.
Count count_cis_rooted2(const Graph& g, Vertex u, Vertex v);

// Same counts restricted to the subgraph induced by `allowed`, without
// relabelling. u (and v) must lie in `allowed`.
Count count_cis_within(const Graph& g, Mask allowed);
Count count_cis_rooted_within(const Graph& g, Mask allowed, Vertex u);

enum class ClosedFormKind { Path, Cycle, Clique };

// n(n+1)/2, n^2-n+1 and 2^n-1. Throws BadOrder for n < 1, or n < 3 on a cycle.
Count closed_form(ClosedFormKind kind, int n);

}  // namespace cis
