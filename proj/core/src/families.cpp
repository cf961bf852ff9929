#include "cis/families.hpp"

#include <array>
#include <charconv>

#include "cis/counting.hpp"
#include "cis/error.hpp"

namespace cis {

namespace {

[[noreturn]] void bad_class(const std::string& what) { throw Error(ErrorKind::BadClass, what); }

void require(bool ok, const std::string& what) {
  if (!ok) bad_class(what);
}

void check_total(long total) {
  if (total > kMaxOrder) {
    throw Error(ErrorKind::OrderOutOfRange, "family member would have " + std::to_string(total) +
                                                " vertices (limit 32)");
  }
}

// Adds `count` leaves to vertex v.
Graph add_leaves(Graph g, Vertex v, int count) {
  for (int i = 0; i < count; ++i) {
    const Vertex leaf = g.order();
    g = g.with_vertices(1).with_edge(v, leaf);
  }
  return g;
}

}  // namespace

Graph build_clique_paths(std::span<const int> parts) {
  const int q = static_cast<int>(parts.size());
  if (q < 3) throw Error(ErrorKind::TooFewParts, "clique_paths needs at least 3 parts");
  long total = 0;
  for (int p : parts) {
    require(p >= 1, "clique_paths parts must be at least 1");
    total += p;
  }
  check_total(total);
  Graph g = complete_graph(q);
  for (int i = 0; i < q; ++i) g = attach_path(g, i, parts[i]);
  return g;
}

ExtremalFormulaParams ExtremalFormulaParams::of(int n, int c) {
  require(n >= 2 && n <= kMaxOrder, "order must lie in [2, 32]");
  require(c >= 0 && c <= n - 2, "cut count must lie in [0, n-2]");
  ExtremalFormulaParams p;
  p.n = n;
  p.c = c;
  p.s = n / (n - c);
  p.t = n % (n - c);
  return p;
}

Graph build_balanced_max(int n, int c) {
  require(n >= 3 && n <= kMaxOrder, "balanced_max needs 3 <= n <= 32");
  require(c >= 0 && c <= n - 3, "balanced_max needs 0 <= c <= n-3");
  const auto p = ExtremalFormulaParams::of(n, c);
  const int q = n - c;
  std::vector<int> parts(q, p.s);
  for (int i = q - p.t; i < q; ++i) parts[i] = p.s + 1;
  return build_clique_paths(parts);
}

Count max_cut_formula(int n, int c) {
  const auto p = ExtremalFormulaParams::of(n, c);
  const int q = n - c;
  return Count(static_cast<std::uint64_t>(q - p.t)) * binom2(p.s) +
         Count(static_cast<std::uint64_t>(p.t)) * binom2(p.s + 1) +
         power(Count(static_cast<std::uint64_t>(p.s + 1)), q - p.t) *
             power(Count(static_cast<std::uint64_t>(p.s + 2)), p.t) -
         Count(1);
}

Graph build_two_cliques(int n, int l) {
  require(n >= 3, "two_cliques needs n >= 3");
  require(l >= 2 && 2 * l <= n + 1, "two_cliques needs 2 <= l <= (n+1)/2");
  check_total(n);
  return identify(complete_graph(l), l - 1, complete_graph(n + 1 - l), 0);
}

Count two_cliques_formula(int n, int l) {
  require(n >= 3, "two_cliques needs n >= 3");
  require(l >= 2 && 2 * l <= n + 1, "two_cliques needs 2 <= l <= (n+1)/2");
  return pow2(n - 1) + pow2(l - 1) + pow2(n - l) - Count(2);
}

Graph build_t1(int n, int p) {
  require(n >= 4, "t1 needs n >= 4");
  require(p >= 2 && p <= n - 2, "t1 needs 2 <= p <= n-2");
  check_total(n);
  Graph g = path_graph(n - p);
  g = add_leaves(g, 0, p / 2);
  return add_leaves(g, n - p - 1, p - p / 2);
}

Graph build_t2(int n, int p) {
  require(n >= 4, "t2 needs n >= 4");
  require(p >= 2 && p <= n - 1, "t2 needs 2 <= p <= n-1");
  check_total(n);
  const int m = (n - 1) / p;
  const int l = n - 1 - p * m;
  Graph g = Graph::empty(1);
  for (int leg = 0; leg < p; ++leg) {
    // l legs with m+1 edges, then p-l legs with m edges.
    g = attach_path(g, 0, (leg < l ? m + 1 : m) + 1);
  }
  return g;
}

Graph build_clique_star(int n, int p) {
  require(n >= 5, "clique_star needs n >= 5");
  require(p >= 0 && p <= n - 3, "clique_star needs 0 <= p <= n-3");
  check_total(n);
  return add_leaves(complete_graph(n - p), 0, p);
}

Graph build_subdivided_star(int n) {
  require(n >= 5, "subdivided_star needs n >= 5");
  check_total(n);
  // Centre 0 with n-3 leaves, plus the path 0 - (n-2) - (n-1).
  Graph g = add_leaves(Graph::empty(1), 0, n - 2);
  return add_leaves(g, n - 2, 1);
}

Graph build_maxnp(int n, int p) {
  require(n >= 5, "maxnp needs n >= 5");
  require(p >= 0 && p <= n - 2, "maxnp needs 0 <= p <= n-2");
  return p == n - 2 ? build_subdivided_star(n) : build_clique_star(n, p);
}

Count maxnp_formula(int n, int p) {
  require(n >= 5, "maxnp needs n >= 5");
  require(p >= 0 && p <= n - 2, "maxnp needs 0 <= p <= n-2");
  if (p == n - 2) return Count(static_cast<std::uint64_t>(n)) + Count(3) * pow2(n - 3);
  return pow2(n - 1) + pow2(n - p - 1) + Count(static_cast<std::uint64_t>(p)) - Count(1);
}

Count min_pendant_formula(int n, int p) {
  require(n >= 4, "min_pendant needs n >= 4");
  require(p >= 2 && p <= n - 2, "min_pendant needs 2 <= p <= n-2");
  const auto spine = static_cast<std::uint64_t>(n - p - 1);
  return pow2(p) + Count(spine) * (pow2(p / 2) + pow2(p - p / 2)) +
         Count(static_cast<std::uint64_t>(p)) + Count(spine * (spine - 1) / 2);
}

Count unicyclic_min_formula(int n) {
  require(n >= 3, "unicyclic bound needs n >= 3");
  const auto nn = static_cast<std::uint64_t>(n);
  return Count((nn * nn + 3 * nn - 4) / 2);
}

Graph build_double_tadpole(int n, int l, int r) {
  require(l >= 3 && r >= 3, "double_tadpole needs l, r >= 3");
  require(n >= l + r, "double_tadpole needs n >= l + r");
  check_total(n);
  Graph g = attach_path(cycle_graph(l), 0, n + 2 - l - r);
  return identify(g, g.order() - 1, cycle_graph(r), 0);
}

Count double_tadpole_min_formula(int n) {
  require(n >= 6, "double tadpole bound needs n >= 6");
  const auto nn = static_cast<std::uint64_t>(n);
  return Count((nn - 1) * (nn + 6) / 2);
}

Graph build_tadpole(int n, int l) {
  require(l >= 3 && n >= l, "tadpole needs n >= l >= 3");
  check_total(n);
  return attach_path(cycle_graph(l), 0, n - l + 1);
}

Graph build_special(int n, int i, int j) {
  require(n >= 4, "special needs n >= 4");
  require(i >= 0 && i < j && j < n - 1, "special needs 0 <= i < j < n-1");
  check_total(n);
  return cycle_graph(n - 1).with_vertices(1).with_edge(n - 1, i).with_edge(n - 1, j);
}

Graph build_identified_cycles(int n, int l) {
  require(l >= 3 && l <= n - 2, "identified_cycles needs 3 <= l <= n-2");
  check_total(n);
  return identify(cycle_graph(l), 0, cycle_graph(n - l + 1), 0);
}

// ---------------------------------------------------------------------------
// FamilySpec

namespace {

struct KindInfo {
  FamilyKind kind;
  std::string_view name;
  int min_params;
  int max_params;  // -1: unbounded
};

constexpr std::array<KindInfo, 14> kKinds{{
    {FamilyKind::CliquePaths, "clique_paths", 3, -1},
    {FamilyKind::BalancedMax, "balanced_max", 2, 2},
    {FamilyKind::TwoCliques, "two_cliques", 2, 2},
    {FamilyKind::T1, "t1", 2, 2},
    {FamilyKind::T2, "t2", 2, 2},
    {FamilyKind::DoubleTadpole, "double_tadpole", 3, 3},
    {FamilyKind::Tadpole, "tadpole", 1, 2},
    {FamilyKind::Special, "special", 3, 3},
    {FamilyKind::CliqueStar, "clique_star", 2, 2},
    {FamilyKind::SubdividedStar, "subdivided_star", 1, 1},
    {FamilyKind::Path, "path", 1, 1},
    {FamilyKind::Cycle, "cycle", 1, 1},
    {FamilyKind::Clique, "clique", 1, 1},
    {FamilyKind::IdentifiedCycles, "identified_cycles", 2, 2},
}};

const KindInfo& info(FamilyKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw Error(ErrorKind::BadClass, "unknown family kind");
}

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "family spec '" + std::string(text) + "': " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view family_name(FamilyKind kind) { return info(kind).name; }

FamilySpec FamilySpec::parse(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto open = whole.find('(');
  if (open == std::string_view::npos || whole.back() != ')') parse_error(text, "expected kind(p1,...)");
  const std::string_view name = trim(whole.substr(0, open));
  const KindInfo* found = nullptr;
  for (const auto& k : kKinds) {
    if (k.name == name) found = &k;
  }
  if (!found) parse_error(text, "unknown kind '" + std::string(name) + "'");

  FamilySpec spec;
  spec.kind = found->kind;
  std::string_view body = whole.substr(open + 1, whole.size() - open - 2);
  if (!trim(body).empty()) {
    while (true) {
      const auto comma = body.find(',');
      const std::string_view item = trim(body.substr(0, comma));
      int value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
        parse_error(text, "bad integer '" + std::string(item) + "'");
      }
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  }
  const int count = static_cast<int>(spec.params.size());
  if (count < found->min_params || (found->max_params >= 0 && count > found->max_params)) {
    if (spec.kind == FamilyKind::CliquePaths) {
      throw Error(ErrorKind::TooFewParts, "clique_paths needs at least 3 parts");
    }
    throw Error(ErrorKind::BadClass, std::string(found->name) + " takes " +
                                         std::to_string(found->min_params) + " parameter(s)");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(family_name(kind));
  out.push_back('(');
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(params[i]);
  }
  out.push_back(')');
  return out;
}

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t k) {
    if (p.size() < k) throw Error(ErrorKind::BadClass, "missing family parameters");
  };
  switch (spec.kind) {
    case FamilyKind::CliquePaths: return build_clique_paths(p);
    case FamilyKind::BalancedMax: need(2); return build_balanced_max(p[0], p[1]);
    case FamilyKind::TwoCliques: need(2); return build_two_cliques(p[0], p[1]);
    case FamilyKind::T1: need(2); return build_t1(p[0], p[1]);
    case FamilyKind::T2: need(2); return build_t2(p[0], p[1]);
    case FamilyKind::DoubleTadpole: need(3); return build_double_tadpole(p[0], p[1], p[2]);
    case FamilyKind::Tadpole: need(1); return build_tadpole(p[0], p.size() > 1 ? p[1] : 3);
    case FamilyKind::Special: need(3); return build_special(p[0], p[1], p[2]);
    case FamilyKind::CliqueStar: need(2); return build_clique_star(p[0], p[1]);
    case FamilyKind::SubdividedStar: need(1); return build_subdivided_star(p[0]);
    case FamilyKind::Path: need(1); return path_graph(p[0]);
    case FamilyKind::Cycle: need(1); return cycle_graph(p[0]);
    case FamilyKind::Clique: need(1); return complete_graph(p[0]);
    case FamilyKind::IdentifiedCycles: need(2); return build_identified_cycles(p[0], p[1]);
  }
  throw Error(ErrorKind::BadClass, "unknown family kind");
}

std::optional<Count> family_formula(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::BalancedMax: return max_cut_formula(p[0], p[1]);
    case FamilyKind::TwoCliques: return two_cliques_formula(p[0], p[1]);
    case FamilyKind::T1: return min_pendant_formula(p[0], p[1]);
    case FamilyKind::DoubleTadpole:
      if (p[1] == 3 && p[2] == 3) return double_tadpole_min_formula(p[0]);
      return std::nullopt;
    case FamilyKind::Tadpole:
      if (p.size() == 1 || p[1] == 3) return unicyclic_min_formula(p[0]);
      return std::nullopt;
    case FamilyKind::CliqueStar: return maxnp_formula(p[0], p[1]);
    case FamilyKind::SubdividedStar: return maxnp_formula(p[0], p[0] - 2);
    case FamilyKind::Path: return closed_form(ClosedFormKind::Path, p[0]);
    case FamilyKind::Cycle: return closed_form(ClosedFormKind::Cycle, p[0]);
    case FamilyKind::Clique: return closed_form(ClosedFormKind::Clique, p[0]);
    default: return std::nullopt;
  }
}

}  // namespace cis
