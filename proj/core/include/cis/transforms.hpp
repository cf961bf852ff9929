#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cis/count.hpp"
#include "cis/graph.hpp"

namespace cis {

enum class LemmaId {
  AddEdgeBlock,
  TwoBlock,
  PathOrder,
  OneCut,
  BlockTwoCutPend,
  BlockTwoCutCenter,
  BlockTwoCutCenterM1,
  SpeGraph,
  PathOrderMin,
  QkSliding,
  Q1kSliding,
  RefQkSliding,
};

std::string_view to_string(LemmaId id);
LemmaId parse_lemma_id(std::string_view text);  // ParseError
const std::vector<LemmaId>& all_lemma_ids();

// A component graph together with the vertex where it gets glued on.
struct Rooted {
  Graph graph;
  Vertex root = 0;
};

// Add edge a-b, where a and b are nonadjacent and lie in a common block.
struct AddEdgeBlockParams {
  Graph g;
  Vertex a = 0;
  Vertex b = 0;
};

// w lies in at least three blocks; v1 and v2 are neighbours of w in two
// different blocks through w. Adds the edge v1-v2.
struct TwoBlockParams {
  Graph g;
  Vertex w = 0;
  Vertex v1 = 0;
  Vertex v2 = 0;
};

// H(n1;n2): a path of order n1 hangs from u and one of order n2 from v.
// Shared by the path-balancing and path-merging lemmas.
struct PathPairParams {
  Graph h;
  Vertex u = 0;
  Vertex v = 0;
  int n1 = 1;
  int n2 = 1;
};

// K_l and K_{n+1-l} sharing a vertex, against l + 1.
struct OneCutParams {
  int n = 0;
  int l = 0;
};

// K_l; vertex 0 of K_l is w_1 of K_r, and w_j (j >= 2) is glued to parts[j-2].
struct CutPendParams {
  int l = 0;
  std::vector<Rooted> r_parts;  // R_2 .. R_r
};

// K_l at v1 and K_r at v2 of M, with u_j glued to l_parts[j-2] and w_j to
// r_parts[j-2].
struct CutCenterParams {
  Graph m;
  Vertex v1 = 0;
  Vertex v2 = 1;
  std::vector<Rooted> l_parts;  // L_2 .. L_l
  std::vector<Rooted> r_parts;  // R_2 .. R_r
};

// As CutCenterParams with M a single vertex shared by both cliques.
struct CutCenterM1Params {
  std::vector<Rooted> l_parts;
  std::vector<Rooted> r_parts;
};

// C_{n-1} on 0..n-2 plus a vertex adjacent to cycle vertices i < j.
struct SpeGraphParams {
  int n = 0;
  int i = 0;
  int j = 1;
};

// L and R joined at u and v. For qk sliding, P_k hangs at u and P_q runs
// from u to v; for q=1 sliding, u and v are merged and q is ignored.
struct SlidingParams {
  Rooted left;
  Rooted right;
  int k = 2;
  int q = 2;
};

// G1: P_k at w, P_q from u to v (u merged with v when q = 1).
// G2: P_{q+k-1} from u to v.
struct RefSlidingParams {
  Graph l;
  Vertex u = 0;
  Vertex w = 1;
  Rooted right;
  int k = 2;
  int q = 1;
};

using LemmaParams = std::variant<AddEdgeBlockParams, TwoBlockParams, PathPairParams, OneCutParams,
                                 CutPendParams, CutCenterParams, CutCenterM1Params, SpeGraphParams,
                                 SlidingParams, RefSlidingParams>;

class LemmaInstance {
 public:
  // Checks every hypothesis of the lemma; throws BadInstance naming the one
  // that fails.
  static LemmaInstance make(LemmaId id, LemmaParams params);

  LemmaId id() const { return id_; }
  const LemmaParams& params() const { return params_; }
  std::string describe() const;

 private:
  LemmaInstance(LemmaId id, LemmaParams params) : id_(id), params_(std::move(params)) {}

  LemmaId id_;
  LemmaParams params_;
};

// (premise graph, transformed graph): G and G', H(n1;n2) and its partner,
// G1 and G3, H(k;q) and H(1;q+k-1), and so on.
std::pair<Graph, Graph> apply(const LemmaInstance& inst);

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };
std::string_view to_string(Relation r);
Relation compare_counts(const Count& lhs, const Count& rhs);
// Whether an observed strict/equal relation is allowed by a claimed one.
bool satisfies(Relation observed, Relation claimed);

struct LemmaReport {
  LemmaId lemma_id = LemmaId::AddEdgeBlock;
  std::string instance;
  Count lhs;
  Count rhs;
  Relation relation_claimed = Relation::Greater;
  Relation relation_observed = Relation::Equal;
  int cut_counts_before = 0;
  int cut_counts_after = 0;
  bool holds = false;
  std::optional<bool> equality_condition_matched;
};

LemmaReport check(const LemmaInstance& inst);

// Deterministic for a fixed (id, budget, seed). Component graphs come
// uniformly from the connected graphs of order <= 5. Throws Unsatisfiable if
// nothing fits in `order_budget` vertices.
LemmaInstance random_instance(LemmaId id, int order_budget, std::uint64_t seed);

// Every valid path-balancing instance with |H| in 3..5 and n1 + n2 <= max_sum.
std::vector<LemmaInstance> path_order_instances(int max_sum);

// The chain H(n;2), H(n;3), ... as consecutive one_cut instances.
std::vector<LemmaInstance> one_cut_chain(int n);

}  // namespace cis
