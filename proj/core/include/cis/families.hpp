#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cis/count.hpp"
#include "cis/graph.hpp"

namespace cis {

// ---------------------------------------------------------------------------
// Constructors. Every builder throws BadClass when its parameters fall
// outside the documented range (OrderOutOfRange past 32 vertices).

// K_q with a path of order parts[i] hanging from clique vertex i (a part of 1
// adds nothing). Clique vertices are 0..q-1, then each path in turn.
Graph build_clique_paths(std::span<const int> parts);

// The maximiser over connected graphs of order n with c cut vertices:
// G(s;...;s;s+1;...;s+1) with q = n - c parts. Needs 3 <= n and c <= n - 3.
Graph build_balanced_max(int n, int c);

// K_l on 0..l-1 and K_{n+1-l} sharing vertex l-1; 2 <= l <= (n+1)/2.
Graph build_two_cliques(int n, int l);

// P_{n-p} on 0..n-p-1, with floor(p/2) leaves on vertex 0 and ceil(p/2) on
// the other end. n >= 4, 2 <= p <= n-2.
Graph build_t1(int n, int p);

// Spider with centre 0 and p legs as equal as possible, longest legs first.
// n >= 4, 2 <= p <= n-1.
Graph build_t2(int n, int p);

// K_{n-p} with p leaves on vertex 0 (p <= n-3), or for p = n-2 the star
// S_{n-1} with one edge subdivided. n >= 5.
Graph build_maxnp(int n, int p);
Graph build_clique_star(int n, int p);
Graph build_subdivided_star(int n);

// C_l and C_r joined through a path of n+2-l-r vertices between cycle vertex
// 0 of each. l, r >= 3, n >= l + r.
Graph build_double_tadpole(int n, int l, int r);

// C_l with a path hanging from one cycle vertex; order n >= l >= 3.
Graph build_tadpole(int n, int l = 3);

// C_{n-1} on 0..n-2 plus vertex n-1 adjacent to cycle vertices i < j.
Graph build_special(int n, int i, int j);

// C_l and C_{n-l+1} sharing one vertex; 3 <= l <= n-2.
Graph build_identified_cycles(int n, int l);

// ---------------------------------------------------------------------------
// Closed forms (exact integers).

struct ExtremalFormulaParams {
  int n = 0;
  int c = 0;
  int s = 0;  // floor(n / (n - c))
  int t = 0;  // n mod (n - c)

  // BadClass unless 0 <= c <= n - 2.
  static ExtremalFormulaParams of(int n, int c);
};

// Maximum CIS count given order n and c cut vertices.
Count max_cut_formula(int n, int c);
Count two_cliques_formula(int n, int l);
// Minimum for order n and p >= 2 pendant vertices, attained by build_t1.
Count min_pendant_formula(int n, int p);
// (n^2 + 3n - 4) / 2, the K_3 tadpole.
Count unicyclic_min_formula(int n);
Count maxnp_formula(int n, int p);
// (n-1)(n+6)/2, the double tadpole D_n(3;3).
Count double_tadpole_min_formula(int n);

// ---------------------------------------------------------------------------
// Text form "kind(p1,p2,...)", e.g. "double_tadpole(8,3,3)".

enum class FamilyKind {
  CliquePaths,
  BalancedMax,
  TwoCliques,
  T1,
  T2,
  DoubleTadpole,
  Tadpole,
  Special,
  CliqueStar,
  SubdividedStar,
  Path,
  Cycle,
  Clique,
  IdentifiedCycles,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<int> params;

  // Throws ParseError for bad syntax or an unknown kind, BadClass for the
  // wrong number of parameters.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const FamilySpec&) const = default;
};

std::string_view family_name(FamilyKind kind);
Graph build(const FamilySpec& spec);
// The closed form attached to a family member, when there is one.
std::optional<Count> family_formula(const FamilySpec& spec);

}  // namespace cis
