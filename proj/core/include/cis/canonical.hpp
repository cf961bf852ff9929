#pragma once

#include <string>
#include <vector>

#include "cis/graph.hpp"

namespace cis {

struct CanonicalLabeling {
  // The input relabelled so that its upper-triangle adjacency string (graph6
  // column order) is minimal among the leaves of the refinement search tree.
  Graph graph;
  // order[k] is the input vertex that receives canonical label k.
  std::vector<Vertex> order;
};

// Individualisation-refinement search with equitable partitions and
// automorphism pruning. Two graphs have equal canonical graphs iff they are
// isomorphic. Intended for orders up to about 12; accepts up to 32.
CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);

// graph6 text of the canonical graph: a complete isomorphism invariant.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace cis
