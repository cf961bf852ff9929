#include "cis/graph.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "cis/error.hpp"

namespace cis {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::BadEdge: return "BadEdge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::TrivialGraph: return "TrivialGraph";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BadClass: return "BadClass";
    case ErrorKind::TooFewParts: return "TooFewParts";
    case ErrorKind::BadInstance: return "BadInstance";
    case ErrorKind::Unsatisfiable: return "Unsatisfiable";
    case ErrorKind::EmptyClass: return "EmptyClass";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

namespace {

void check_order(int n, int lo) {
  if (n < lo || n > kMaxOrder) {
    throw Error(ErrorKind::OrderOutOfRange,
                "order " + std::to_string(n) + " outside [" + std::to_string(lo) + ", 32]");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph Graph::empty(int n) {
  check_order(n, 0);
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  check_order(n, 1);
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::BadEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw Error(ErrorKind::BadEdge, "loop at vertex " + std::to_string(u));
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  int twice = 0;
  for (int i = 0; i < n; ++i) twice += std::popcount(g.adj_[i]);
  g.m_ = twice / 2;
  return g;
}

Graph Graph::from_adjacency(int n, std::span<const Mask> rows) {
  check_order(n, 0);
  if (static_cast<int>(rows.size()) < n) {
    throw Error(ErrorKind::BadEdge, "adjacency has fewer rows than vertices");
  }
  Graph g = empty(n);
  int twice = 0;
  for (int i = 0; i < n; ++i) {
    Mask r = rows[i];
    if (r & ~low_bits(n)) throw Error(ErrorKind::BadEdge, "row references a vertex >= n");
    if (r & bit(i)) throw Error(ErrorKind::BadEdge, "loop at vertex " + std::to_string(i));
    g.adj_[i] = r;
    twice += std::popcount(r);
  }
  for (int i = 0; i < n; ++i) {
    for (Vertex j : VertexSet(g.adj_[i])) {
      if (!(g.adj_[j] & bit(i))) throw Error(ErrorKind::BadEdge, "asymmetric adjacency");
    }
  }
  g.m_ = twice / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorKind::BadEdge, "vertex " + std::to_string(v) + " not in graph of order " +
                                        std::to_string(n_));
  }
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j : VertexSet(adj_[i] & ~low_bits(i + 1))) out.emplace_back(i, j);
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::BadEdge, "loop at vertex " + std::to_string(u));
  Graph g = *this;
  if (!has_edge(u, v)) {
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  if (has_edge(u, v)) {
    g.adj_[u] &= ~bit(v);
    g.adj_[v] &= ~bit(u);
    --g.m_;
  }
  return g;
}

Graph Graph::with_vertices(int count) const {
  check_order(n_ + count, 0);
  Graph g = *this;
  g.n_ += count;
  return g;
}

Graph Graph::without_vertex(Vertex v) const {
  check_vertex(v);
  return induced(vertices() - VertexSet(bit(v)));
}

Graph Graph::induced(VertexSet s) const {
  std::array<Vertex, kMaxOrder> order{};
  int k = 0;
  for (Vertex v : s) {
    check_vertex(v);
    order[k++] = v;
  }
  Graph g = empty(k);
  int twice = 0;
  for (int i = 0; i < k; ++i) {
    Mask r = 0;
    for (int j = 0; j < k; ++j) {
      if (has_edge(order[i], order[j])) r |= bit(j);
    }
    g.adj_[i] = r;
    twice += std::popcount(r);
  }
  g.m_ = twice / 2;
  return g;
}

Graph Graph::relabelled(std::span<const Vertex> order) const {
  if (static_cast<int>(order.size()) != n_) {
    throw Error(ErrorKind::BadEdge, "relabelling has wrong length");
  }
  std::array<Vertex, kMaxOrder> pos{};
  Mask seen = 0;
  for (int k = 0; k < n_; ++k) {
    check_vertex(order[k]);
    if (seen & bit(order[k])) throw Error(ErrorKind::BadEdge, "relabelling is not a permutation");
    seen |= bit(order[k]);
    pos[order[k]] = k;
  }
  Graph g = empty(n_);
  g.m_ = m_;
  for (int k = 0; k < n_; ++k) {
    Mask r = 0;
    for (Vertex w : VertexSet(adj_[order[k]])) r |= bit(pos[w]);
    g.adj_[k] = r;
  }
  return g;
}

Graph path_graph(int n) {
  check_order(n, 1);
  Graph g = Graph::empty(n);
  for (Vertex i = 0; i + 1 < n; ++i) g = g.with_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::BadOrder, "a cycle needs at least 3 vertices");
  return path_graph(n).with_edge(0, n - 1);
}

Graph complete_graph(int n) {
  check_order(n, 1);
  std::array<Mask, kMaxOrder> rows{};
  for (int i = 0; i < n; ++i) rows[i] = low_bits(n) & ~bit(i);
  return Graph::from_adjacency(n, rows);
}

// ---------------------------------------------------------------------------
// graph6

Graph from_graph6(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw Error(ErrorKind::ParseError, "graph6 byte out of range: '" + std::string(1, c) + "'");
    }
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 4 && text[1] != 126) {
    n = (long(text[1] - 63) << 12) | (long(text[2] - 63) << 6) | long(text[3] - 63);
    pos = 4;
  } else if (text.size() >= 8) {
    n = 0;
    for (int i = 2; i < 8; ++i) n = (n << 6) | long(text[i] - 63);
    pos = 8;
  } else {
    throw Error(ErrorKind::ParseError, "truncated graph6 order header");
  }
  if (n > kMaxOrder) {
    throw Error(ErrorKind::OrderOutOfRange, "graph6 order " + std::to_string(n) + " exceeds 32");
  }
  if (n < 1) throw Error(ErrorKind::OrderOutOfRange, "graph6 order 0");

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes) {
    throw Error(ErrorKind::ParseError, "graph6 body has " + std::to_string(text.size() - pos) +
                                           " bytes, expected " + std::to_string(nbytes));
  }
  std::array<Mask, kMaxOrder> rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (k % 6 != 0) {
    int last = text[pos + nbytes - 1] - 63;
    if (last & ((1 << (6 - k % 6)) - 1)) {
      throw Error(ErrorKind::ParseError, "graph6 padding bits are not zero");
    }
  }
  return Graph::from_adjacency(static_cast<int>(n), rows);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list text

namespace {

std::vector<long> parse_ints(std::string_view line, int lineno) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' &&
                              *ptr != '\r')) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": expected integers, got '" + std::string(line) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int lineno = 0;
  long n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    auto ints = parse_ints(line, lineno);
    if (n < 0) {
      if (ints.size() != 1) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected the order n");
      }
      n = ints[0];
      if (n < 1 || n > kMaxOrder) {
        throw Error(ErrorKind::OrderOutOfRange,
                    "line " + std::to_string(lineno) + ": order " + std::to_string(n));
      }
      continue;
    }
    if (ints.size() != 2) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'i j'");
    }
    if (ints[0] < 0 || ints[1] < 0 || ints[0] >= n || ints[1] >= n || ints[0] == ints[1]) {
      throw Error(ErrorKind::BadEdge, "line " + std::to_string(lineno) + ": bad edge");
    }
    edges.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "edge list has no order line");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Connectivity and block structure

bool induces_connected(const Graph& g, Mask s) {
  if (s == 0) return false;
  Mask seen = s & (~s + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.row(v);
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && induces_connected(g, g.vertices().bits());
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Mask rest = g.vertices().bits();
  while (rest) {
    Mask seen = rest & (~rest + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Vertex v : VertexSet(frontier)) next |= g.row(v);
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    out.emplace_back(seen);
    rest &= ~seen;
  }
  return out;
}

namespace {

// Hopcroft-Tarjan lowpoint traversal collecting both cut vertices and the
// vertex sets of blocks (via an edge stack).
struct Lowpoint {
  const Graph& g;
  std::array<int, kMaxOrder> disc{};
  std::array<int, kMaxOrder> low{};
  std::vector<std::pair<Vertex, Vertex>> stack;
  std::vector<VertexSet> found;
  Mask cuts = 0;
  int clock = 0;

  explicit Lowpoint(const Graph& graph) : g(graph) { disc.fill(-1); }

  void visit(Vertex v, Vertex parent) {
    disc[v] = low[v] = clock++;
    int children = 0;
    for (Vertex w : g.neighbours(v)) {
      if (disc[w] < 0) {
        ++children;
        stack.emplace_back(v, w);
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0) cuts |= bit(v);
          Mask block = 0;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block |= bit(a) | bit(b);
            if (a == v && b == w) break;
          }
          found.emplace_back(block);
        }
      } else if (w != parent && disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent < 0 && children > 1) cuts |= bit(v);
  }
};

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
}

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  require_connected(g);
  Lowpoint lp(g);
  lp.visit(0, -1);
  return VertexSet(lp.cuts);
}

VertexSet pendant_vertices(const Graph& g) {
  Mask out = 0;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 1) out |= bit(v);
  }
  return VertexSet(out);
}

std::vector<VertexSet> blocks(const Graph& g) {
  require_connected(g);
  if (g.order() == 1) throw Error(ErrorKind::TrivialGraph, "K_1 has no blocks");
  Lowpoint lp(g);
  lp.visit(0, -1);
  std::sort(lp.found.begin(), lp.found.end(),
            [](VertexSet a, VertexSet b) { return a.min() != b.min() ? a.min() < b.min() : a < b; });
  return lp.found;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

bool is_minimally_two_connected(const Graph& g) {
  if (!is_two_connected(g)) return false;
  for (auto [u, v] : g.edges()) {
    if (is_two_connected(g.without_edge(u, v))) return false;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

// ---------------------------------------------------------------------------
// Gluing

Vertex identified_label(int order1, Vertex u, Vertex v, Vertex w) {
  if (w == v) return u;
  return order1 + (w < v ? w : w - 1);
}

Graph identify(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
  if (u < 0 || u >= g1.order() || v < 0 || v >= g2.order()) {
    throw Error(ErrorKind::BadEdge, "identified vertex outside its graph");
  }
  const int n = g1.order() + g2.order() - 1;
  check_order(n, 1);
  std::array<Mask, kMaxOrder> rows{};
  for (Vertex i = 0; i < g1.order(); ++i) rows[i] = g1.row(i);
  for (auto [a, b] : g2.edges()) {
    Vertex x = identified_label(g1.order(), u, v, a);
    Vertex y = identified_label(g1.order(), u, v, b);
    rows[x] |= bit(y);
    rows[y] |= bit(x);
  }
  return Graph::from_adjacency(n, rows);
}

Graph attach_path(const Graph& g, Vertex v, int k) {
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::BadEdge, "attachment vertex outside graph");
  if (k < 1) throw Error(ErrorKind::BadOrder, "path order must be at least 1");
  if (k == 1) return g;
  return identify(g, v, path_graph(k), 0);
}

}  // namespace cis
