#include "cis/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "cis/canonical.hpp"
#include "cis/counting.hpp"
#include "cis/error.hpp"
#include "cis/families.hpp"

namespace cis {

namespace {

using Clock = std::chrono::steady_clock;

void check_enumeration_order(int n, int hi) {
  if (n < 1 || n > hi) {
    throw Error(ErrorKind::OrderOutOfRange,
                "order " + std::to_string(n) + " outside [1, " + std::to_string(hi) + "]");
  }
}

// Runs body(i, worker) for i in [0, count). Indices are handed out in chunks
// from a shared counter; the first exception is rethrown after all workers
// stop.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  workers = resolve_workers(workers);
  constexpr std::size_t kChunk = 32;
  if (workers == 1 || count <= kChunk) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&](int worker) {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t start = next.fetch_add(kChunk);
        if (start >= count) break;
        const std::size_t stop = std::min(count, start + kChunk);
        for (std::size_t i = start; i < stop; ++i) body(i, worker);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) threads.emplace_back(run, w);
    run(0);
  }
  if (error) std::rethrow_exception(error);
}

// Deletion rule for the augmentation: among non-cut vertices, keep those with
// the largest invariant f, then take the first one in canonical order.
int vertex_invariant(const Graph& g, Vertex v) {
  int sum = 0;
  for (Vertex w : g.neighbours(v)) sum += g.degree(w);
  return g.degree(v) * 1024 + sum;
}

std::optional<Graph> accept_child(const Graph& child, const Graph& parent) {
  const int n = child.order();
  const Vertex added = n - 1;
  std::array<int, kMaxOrder> f;
  for (int v = 0; v < n; ++v) f[v] = vertex_invariant(child, v);

  Mask higher = 0;
  Mask ties = 0;
  for (int v = 0; v < n; ++v) {
    if (f[v] > f[added]) higher |= bit(v);
    if (f[v] == f[added]) ties |= bit(v);
  }
  Mask cuts = 0;
  bool cuts_known = false;
  if (higher) {
    cuts = cut_vertices(child).bits();
    cuts_known = true;
    if (higher & ~cuts) return std::nullopt;
  }
  CanonicalLabeling lab = canonical_labeling(child);
  if (ties != bit(added)) {
    if (!cuts_known) cuts = cut_vertices(child).bits();
    ties &= ~cuts;
  }
  Vertex chosen = added;
  for (Vertex v : lab.order) {
    if (ties & bit(v)) {
      chosen = v;
      break;
    }
  }
  if (chosen != added && canonical_graph(child.without_vertex(chosen)) != parent) return std::nullopt;
  return std::move(lab.graph);
}

std::mutex cache_mutex;
std::array<std::vector<Graph>, kCachedEnumerationOrder + 1> cache;

std::vector<Graph> next_level(const std::vector<Graph>& parents, int workers) {
  std::vector<std::vector<Graph>> per_parent(parents.size());
  parallel_for(parents.size(), workers,
               [&](std::size_t i, int) { per_parent[i] = augment(parents[i]); });
  std::vector<Graph> out;
  std::size_t total = 0;
  for (const auto& v : per_parent) total += v.size();
  out.reserve(total);
  for (auto& v : per_parent) out.insert(out.end(), v.begin(), v.end());
  return out;
}

struct CellAcc {
  std::size_t size = 0;
  bool any = false;
  Count best;
  std::vector<Graph> witnesses;

  void add(const Graph& g, Objective obj) {
    ++size;
    const Count value = count_cis(g);
    const bool better = !any || (obj == Objective::Min ? value < best : value > best);
    if (better) {
      any = true;
      best = value;
      witnesses.clear();
    }
    if (value == best) witnesses.push_back(g);
  }

  void merge(CellAcc&& other, Objective obj) {
    size += other.size;
    if (!other.any) return;
    const bool better = !any || (obj == Objective::Min ? other.best < best : other.best > best);
    if (better) {
      any = true;
      best = other.best;
      witnesses = std::move(other.witnesses);
    } else if (other.best == best) {
      witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    }
  }

  std::vector<std::string> witness_strings() const {
    std::vector<std::string> out;
    out.reserve(witnesses.size());
    for (const Graph& g : witnesses) out.push_back(to_graph6(g));
    std::sort(out.begin(), out.end());
    return out;
  }
};

using CellMap = std::map<int, CellAcc>;

// Groups the classes of order n by key(g) (negative keys are skipped) and
// keeps, per key, the class size, the optimum and every optimal graph.
template <class Key>
CellMap scan(int n, int workers, Objective obj, Key&& key) {
  workers = resolve_workers(workers);
  std::vector<CellMap> partial(workers);
  for_each_connected(n, workers, [&](const Graph& g, int worker) {
    const int k = key(g);
    if (k >= 0) partial[worker][k].add(g, obj);
  });
  CellMap out;
  for (CellMap& m : partial) {
    for (auto& [k, acc] : m) out[k].merge(std::move(acc), obj);
  }
  return out;
}

int cut_count(const Graph& g) { return cut_vertices(g).size(); }
int pendant_count(const Graph& g) { return pendant_vertices(g).size(); }

TheoremCell bound_cell(int n, std::string param_name, std::vector<int> param, const CellAcc* acc,
                       const Count& formula, const Graph& expected) {
  TheoremCell cell;
  cell.n = n;
  cell.param_name = std::move(param_name);
  cell.param = std::move(param);
  cell.expected = formula;
  cell.relation = "=";
  cell.expected_witness = canonical_form(expected);
  if (acc == nullptr || !acc->any) {
    cell.class_size = 0;
    cell.uniqueness_matched = false;
    return cell;
  }
  cell.class_size = acc->size;
  cell.observed = acc->best;
  cell.witnesses = acc->witness_strings();
  cell.bound_matched = cell.observed == cell.expected;
  cell.uniqueness_matched = cell.witnesses.size() == 1 && cell.witnesses[0] == *cell.expected_witness;
  cell.pass = cell.bound_matched && *cell.uniqueness_matched;
  return cell;
}

TheoremCell strict_cell(int n, std::string param_name, std::vector<int> param, const Count& lhs,
                        const Count& rhs) {
  TheoremCell cell;
  cell.n = n;
  cell.param_name = std::move(param_name);
  cell.param = std::move(param);
  cell.observed = lhs;
  cell.expected = rhs;
  cell.relation = ">";
  cell.bound_matched = lhs > rhs;
  cell.pass = cell.bound_matched;
  return cell;
}

const CellAcc* find_cell(const CellMap& m, int key) {
  auto it = m.find(key);
  return it == m.end() ? nullptr : &it->second;
}

// Minimally 2-connected class counts for n = 3..10 as quoted in the paper.
constexpr std::array<std::uint64_t, 8> kMinimally2ConnectedCounts = {1, 1, 2, 3, 6, 12, 28, 68};

struct TheoremRange {
  int lo;
  int hi;
};

TheoremRange legal_range(TheoremId id) {
  switch (id) {
    case TheoremId::Main1Cut: return {3, kMaxEnumerationOrder};
    case TheoremId::Main2Cut: return {3, kMaxEnumerationOrder};
    case TheoremId::MinUniN: return {3, kMaxEnumerationOrder};
    case TheoremId::MaxNP: return {5, kMaxEnumerationOrder};
    case TheoremId::MinPPend: return {4, kMaxEnumerationOrder};
    case TheoremId::TheoP0: return {6, kMaxEnumerationOrder};
    case TheoremId::PropTadpole: return {6, kSweepThreshold};
    case TheoremId::Minimally2ConnCounts: return {3, 3 + static_cast<int>(kMinimally2ConnectedCounts.size()) - 1};
    case TheoremId::TreeSpiderMax: return {4, kMaxEnumerationOrder};
  }
  return {0, -1};
}

void verify_order(TheoremId id, int n, TheoremReport& report, int workers) {
  auto& cells = report.cells;
  switch (id) {
    case TheoremId::Main1Cut: {
      const CellMap m = scan(n, workers, Objective::Max, cut_count);
      for (int c = 0; c <= n - 2; ++c) {
        const Graph expected = c <= n - 3 ? build_balanced_max(n, c) : path_graph(n);
        cells.push_back(bound_cell(n, "c", {c}, find_cell(m, c), max_cut_formula(n, c), expected));
      }
      break;
    }
    case TheoremId::Main2Cut: {
      const CellMap m = scan(n, workers, Objective::Min,
                             [](const Graph& g) { return is_two_connected(g) ? 0 : -1; });
      cells.push_back(bound_cell(n, "", {}, find_cell(m, 0), closed_form(ClosedFormKind::Cycle, n),
                                 cycle_graph(n)));
      break;
    }
    case TheoremId::MinUniN: {
      const CellMap m = scan(n, workers, Objective::Min,
                             [](const Graph& g) { return g.edge_count() == g.order() ? 0 : -1; });
      cells.push_back(bound_cell(n, "", {}, find_cell(m, 0), unicyclic_min_formula(n), build_tadpole(n, 3)));
      break;
    }
    case TheoremId::MaxNP: {
      const CellMap m = scan(n, workers, Objective::Max, pendant_count);
      for (int p = 0; p <= n - 2; ++p) {
        cells.push_back(bound_cell(n, "p", {p}, find_cell(m, p), maxnp_formula(n, p), build_maxnp(n, p)));
      }
      break;
    }
    case TheoremId::MinPPend: {
      const CellMap m = scan(n, workers, Objective::Min, pendant_count);
      for (int p = 1; p <= n - 2; ++p) {
        if (p == 1) {
          cells.push_back(bound_cell(n, "p", {p}, find_cell(m, p), unicyclic_min_formula(n), build_tadpole(n, 3)));
        } else {
          cells.push_back(bound_cell(n, "p", {p}, find_cell(m, p), min_pendant_formula(n, p), build_t1(n, p)));
        }
      }
      break;
    }
    case TheoremId::TheoP0: {
      const CellMap m = scan(n, workers, Objective::Min,
                             [](const Graph& g) { return pendant_vertices(g).empty() ? 0 : -1; });
      cells.push_back(bound_cell(n, "p", {0}, find_cell(m, 0), double_tadpole_min_formula(n),
                                 build_double_tadpole(n, 3, 3)));
      break;
    }
    case TheoremId::PropTadpole: {
      const Count dn = count_cis(build_double_tadpole(n, 3, 3));
      TheoremCell base;
      base.n = n;
      base.param_name = "l,r";
      base.param = {3, 3};
      base.observed = dn;
      base.expected = double_tadpole_min_formula(n);
      base.relation = "=";
      base.bound_matched = base.pass = base.observed == base.expected;
      cells.push_back(std::move(base));
      for (int l = 3; 2 * l <= n; ++l) {
        for (int r = l; l + r <= n; ++r) {
          if (l == 3 && r == 3) continue;
          cells.push_back(strict_cell(n, "l,r", {l, r}, count_cis(build_double_tadpole(n, l, r)), dn));
        }
      }
      const Count cn = closed_form(ClosedFormKind::Cycle, n);
      for (int l = 3; l <= n - 2; ++l) {
        cells.push_back(strict_cell(n, "identified_l", {l}, count_cis(build_identified_cycles(n, l)), cn));
      }
      cells.push_back(strict_cell(n, "cycle", {}, count_cis(cycle_graph(n)), dn));
      break;
    }
    case TheoremId::Minimally2ConnCounts: {
      GraphClass cls;
      cls.n = n;
      cls.minimally_two_connected = true;
      TheoremCell cell;
      cell.n = n;
      cell.class_size = count_class(cls, workers);
      cell.observed = Count(static_cast<std::uint64_t>(*cell.class_size));
      cell.expected = Count(kMinimally2ConnectedCounts[n - 3]);
      cell.relation = "=";
      cell.bound_matched = cell.pass = cell.observed == cell.expected;
      cells.push_back(std::move(cell));
      break;
    }
    case TheoremId::TreeSpiderMax: {
      const CellMap m = scan(n, workers, Objective::Max, [](const Graph& g) {
        return g.edge_count() == g.order() - 1 ? pendant_count(g) : -1;
      });
      for (int p = 2; p <= n - 1; ++p) {
        const Graph spider = build_t2(n, p);
        cells.push_back(bound_cell(n, "p", {p}, find_cell(m, p), count_cis(spider), spider));
      }
      break;
    }
  }
}

WitnessStructure describe_witness(const Graph& g) {
  WitnessStructure w;
  w.graph6 = to_graph6(g);
  w.blocks_minimal = true;
  for (VertexSet b : blocks(g)) {
    w.block_orders.push_back(b.size());
    if (b.size() > 2 && !is_minimally_two_connected(g.induced(b))) w.blocks_minimal = false;
  }
  std::sort(w.block_orders.rbegin(), w.block_orders.rend());
  return w;
}

}  // namespace

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<Graph> augment(const Graph& parent) {
  const int k = parent.order();
  if (k + 1 > kMaxOrder) throw Error(ErrorKind::OrderOutOfRange, "augmentation past the order cap");
  std::array<Mask, kMaxOrder> rows{};
  std::vector<Graph> out;
  for (Mask s = 1; s < bit(k); ++s) {
    for (int v = 0; v < k; ++v) rows[v] = parent.row(v) | ((s >> v) & 1U ? bit(k) : 0);
    rows[k] = s;
    const Graph child = Graph::from_adjacency(k + 1, std::span<const Mask>(rows.data(), k + 1));
    if (auto canon = accept_child(child, parent)) out.push_back(std::move(*canon));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<Graph>& enumerate_connected(int n) {
  check_enumeration_order(n, kCachedEnumerationOrder);
  std::lock_guard lock(cache_mutex);
  if (cache[1].empty()) cache[1].push_back(Graph::empty(1));
  for (int k = 2; k <= n; ++k) {
    if (cache[k].empty()) cache[k] = next_level(cache[k - 1], 0);
  }
  return cache[n];
}

void for_each_connected(int n, int workers, const std::function<void(const Graph&, int)>& visit) {
  check_enumeration_order(n, kMaxEnumerationOrder);
  if (n <= kCachedEnumerationOrder) {
    const std::vector<Graph>& level = enumerate_connected(n);
    parallel_for(level.size(), workers, [&](std::size_t i, int worker) { visit(level[i], worker); });
    return;
  }
  for_each_connected(n - 1, workers, [&](const Graph& parent, int worker) {
    for (const Graph& child : augment(parent)) visit(child, worker);
  });
}

std::vector<Graph> connected_graphs_by_sweep(int n) {
  check_enumeration_order(n, 7);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<std::string> seen;
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::array<Mask, kMaxOrder> rows{};
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) {
        rows[pairs[e].first] |= bit(pairs[e].second);
        rows[pairs[e].second] |= bit(pairs[e].first);
      }
    }
    const Graph g = Graph::from_adjacency(n, std::span<const Mask>(rows.data(), n));
    if (!is_connected(g)) continue;
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  }
  return out;
}

void GraphClass::validate() const {
  check_enumeration_order(n, kMaxEnumerationOrder);
  auto bad = [](const std::string& why) { throw Error(ErrorKind::BadClass, why); };
  if (c && (*c < 0 || *c > n)) bad("cut-vertex count out of range");
  if (p && (*p < 0 || *p > n)) bad("pendant count out of range");
  const bool two = two_connected.value_or(false) || minimally_two_connected.value_or(false);
  if (two && ((c && *c > 0) || (p && *p > 0))) bad("2-connected graphs have no cut or pendant vertices");
  if (minimally_two_connected.value_or(false) && two_connected && !*two_connected) {
    bad("minimally 2-connected graphs are 2-connected");
  }
  if (tree.value_or(false) && unicyclic.value_or(false)) bad("a tree is not unicyclic");
  if (tree.value_or(false) && two) bad("a tree is not 2-connected");
}

bool GraphClass::matches(const Graph& g) const {
  if (g.order() != n) return false;
  if (tree && (g.edge_count() == n - 1) != *tree) return false;
  if (unicyclic && (g.edge_count() == n) != *unicyclic) return false;
  if (p && pendant_count(g) != *p) return false;
  if (c && cut_count(g) != *c) return false;
  if (two_connected && is_two_connected(g) != *two_connected) return false;
  if (minimally_two_connected && is_minimally_two_connected(g) != *minimally_two_connected) return false;
  return true;
}

std::string GraphClass::describe() const {
  std::string out = "n=" + std::to_string(n);
  if (c) out += " c=" + std::to_string(*c);
  if (p) out += " p=" + std::to_string(*p);
  auto flag = [&](const std::optional<bool>& f, const char* name) {
    if (f) out += std::string(*f ? " " : " not-") + name;
  };
  flag(two_connected, "two_connected");
  flag(minimally_two_connected, "minimally_two_connected");
  flag(tree, "tree");
  flag(unicyclic, "unicyclic");
  return out;
}

std::string_view to_string(Objective o) { return o == Objective::Min ? "min" : "max"; }

std::size_t count_class(const GraphClass& cls, int workers) {
  cls.validate();
  workers = resolve_workers(workers);
  std::vector<std::size_t> partial(workers, 0);
  for_each_connected(cls.n, workers, [&](const Graph& g, int worker) {
    if (cls.matches(g)) ++partial[worker];
  });
  std::size_t total = 0;
  for (std::size_t x : partial) total += x;
  return total;
}

std::optional<Count> formula_for(const GraphClass& cls, Objective objective) {
  const int n = cls.n;
  const bool no_flags = !cls.two_connected && !cls.minimally_two_connected && !cls.tree && !cls.unicyclic;
  if (objective == Objective::Max) {
    if (no_flags && cls.c && !cls.p && n >= 2 && *cls.c <= n - 2) return max_cut_formula(n, *cls.c);
    if (no_flags && cls.p && !cls.c && n >= 5 && *cls.p <= n - 2) return maxnp_formula(n, *cls.p);
    return std::nullopt;
  }
  if (cls.two_connected.value_or(false) && !cls.minimally_two_connected && !cls.tree && !cls.unicyclic && n >= 3) {
    return closed_form(ClosedFormKind::Cycle, n);
  }
  if (cls.unicyclic.value_or(false) && !cls.c && !cls.p && !cls.two_connected && !cls.tree && n >= 3) {
    return unicyclic_min_formula(n);
  }
  if (no_flags && cls.p && !cls.c) {
    const int p = *cls.p;
    if (p == 0 && n >= 6) return double_tadpole_min_formula(n);
    if (p == 1 && n >= 4) return unicyclic_min_formula(n);
    if (p >= 2 && p <= n - 2 && n >= 4) return min_pendant_formula(n, p);
  }
  return std::nullopt;
}

ExtremalReport extremal_search(const GraphClass& cls, Objective objective, int workers) {
  cls.validate();
  const auto start = Clock::now();
  const CellMap m = scan(cls.n, workers, objective, [&](const Graph& g) { return cls.matches(g) ? 0 : -1; });
  const CellAcc* acc = find_cell(m, 0);
  if (acc == nullptr || !acc->any) throw Error(ErrorKind::EmptyClass, "no connected graph with " + cls.describe());
  ExtremalReport report;
  report.cls = cls;
  report.objective = objective;
  report.optimum = acc->best;
  report.witnesses = acc->witness_strings();
  report.class_size = acc->size;
  report.formula_prediction = formula_for(cls, objective);
  if (report.formula_prediction) report.prediction_matches = *report.formula_prediction == report.optimum;
  report.elapsed = Clock::now() - start;
  return report;
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Main1Cut: return "main1cut";
    case TheoremId::Main2Cut: return "main2cut";
    case TheoremId::MinUniN: return "min_uni_n";
    case TheoremId::MaxNP: return "maxnp";
    case TheoremId::MinPPend: return "min_p_pend";
    case TheoremId::TheoP0: return "theo_p0";
    case TheoremId::PropTadpole: return "prop_tadpole";
    case TheoremId::Minimally2ConnCounts: return "minimally_2conn_counts";
    case TheoremId::TreeSpiderMax: return "tree_spider_max";
  }
  return "?";
}

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = {
      TheoremId::Main1Cut, TheoremId::Main2Cut,    TheoremId::MinUniN,
      TheoremId::MaxNP,    TheoremId::MinPPend,    TheoremId::TheoP0,
      TheoremId::PropTadpole, TheoremId::Minimally2ConnCounts, TheoremId::TreeSpiderMax,
  };
  return ids;
}

TheoremId parse_theorem_id(std::string_view text) {
  for (TheoremId id : all_theorem_ids()) {
    if (to_string(id) == text) return id;
  }
  throw Error(ErrorKind::ParseError, "unknown theorem id '" + std::string(text) + "'");
}

std::pair<int, int> default_range(TheoremId id) {
  switch (id) {
    case TheoremId::Main1Cut: return {3, 8};
    case TheoremId::Main2Cut: return {3, 9};
    case TheoremId::MinUniN: return {3, 8};
    case TheoremId::MaxNP: return {5, 8};
    case TheoremId::MinPPend: return {4, 8};
    case TheoremId::TheoP0: return {6, 8};
    case TheoremId::PropTadpole: return {6, 12};
    case TheoremId::Minimally2ConnCounts: return {3, 9};
    case TheoremId::TreeSpiderMax: return {4, 9};
  }
  return {0, -1};
}

TheoremReport verify_theorem(TheoremId id, int n_lo, int n_hi, int workers) {
  const TheoremRange legal = legal_range(id);
  if (n_lo > n_hi || n_lo < legal.lo || n_hi > legal.hi) {
    throw Error(ErrorKind::OrderOutOfRange, std::string(to_string(id)) + " checks orders " +
                                                std::to_string(legal.lo) + ".." + std::to_string(legal.hi));
  }
  const auto start = Clock::now();
  TheoremReport report;
  report.id = id;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.advisory = id == TheoremId::TreeSpiderMax;
  for (int n = n_lo; n <= n_hi; ++n) verify_order(id, n, report, workers);
  report.pass = std::all_of(report.cells.begin(), report.cells.end(), [](const TheoremCell& c) { return c.pass; });
  report.elapsed = Clock::now() - start;
  return report;
}

std::vector<OpenProblemRow> open_problem_scan(int n_lo, int n_hi, int workers) {
  if (n_lo > n_hi || n_lo < 1 || n_hi > kMaxEnumerationOrder) {
    throw Error(ErrorKind::OrderOutOfRange, "open problem scan covers orders 1.." +
                                                std::to_string(kMaxEnumerationOrder));
  }
  std::vector<OpenProblemRow> rows;
  for (int n = std::max(n_lo, 4); n <= n_hi; ++n) {
    const auto start = Clock::now();
    const CellMap m = scan(n, workers, Objective::Min, cut_count);
    const auto elapsed = Clock::now() - start;
    for (int c = 1; c <= n - 3; ++c) {
      const CellAcc* acc = find_cell(m, c);
      if (acc == nullptr || !acc->any) continue;
      OpenProblemRow row;
      row.n = n;
      row.c = c;
      row.report.cls.n = n;
      row.report.cls.c = c;
      row.report.objective = Objective::Min;
      row.report.optimum = acc->best;
      row.report.witnesses = acc->witness_strings();
      row.report.class_size = acc->size;
      row.report.elapsed = elapsed;
      for (const std::string& w : row.report.witnesses) {
        row.structure.push_back(describe_witness(from_graph6(w)));
        if (!row.structure.back().blocks_minimal) row.flagged = true;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace cis
