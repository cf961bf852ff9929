#include "cis/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <numeric>

namespace cis {

namespace {

struct Partition {
  std::array<Mask, kMaxOrder> cells{};
  int count = 0;
};

using Rows = std::array<Mask, kMaxOrder>;
using Perm = std::array<std::uint8_t, kMaxOrder>;

// Negative when a's upper-triangle string (columns j = 1.., rows i < j) is
// lexicographically smaller than b's.
int compare_upper(const Rows& a, const Rows& b, int n) {
  for (int j = 1; j < n; ++j) {
    const Mask x = a[j] & low_bits(j);
    const Mask y = b[j] & low_bits(j);
    if (x != y) {
      const int i = std::countr_zero(x ^ y);
      return (x >> i) & 1U ? 1 : -1;
    }
  }
  return 0;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) return out;
    Partition root;
    root.cells[0] = low_bits(n_);
    root.count = 1;
    Queue queue;
    queue.push(root.cells[0]);
    refine(root, queue);
    search(root, 0);

    out.order.assign(best_order_.begin(), best_order_.begin() + n_);
    out.graph = Graph::from_adjacency(n_, best_rows_);
    return out;
  }

 private:
  struct Queue {
    std::array<Mask, 4 * kMaxOrder> items{};
    int head = 0;
    int tail = 0;
    void push(Mask m) { items[tail++] = m; }
    bool empty() const { return head == tail; }
    Mask pop() { return items[head++]; }
  };

  // Coarsest equitable refinement reachable from the splitters in `queue`.
  // Fragments of a split cell keep its position, ordered by ascending
  // neighbour count, so the result commutes with relabelling.
  void refine(Partition& p, Queue& queue) const {
    std::array<Mask, kMaxOrder + 1> by_count;
    while (!queue.empty() && p.count < n_) {
      const Mask splitter = queue.pop();
      for (int i = 0; i < p.count; ++i) {
        const Mask cell = p.cells[i];
        if ((cell & (cell - 1)) == 0) continue;
        int lo = kMaxOrder + 1;
        int hi = -1;
        for (Vertex v : VertexSet(cell)) {
          const int c = std::popcount(g_.row(v) & splitter);
          if (c < lo) {
            for (int k = c; k < (hi < 0 ? c + 1 : lo); ++k) by_count[k] = 0;
            lo = c;
          }
          if (c > hi) {
            for (int k = std::max(hi + 1, lo); k <= c; ++k) by_count[k] = 0;
            hi = c;
          }
          by_count[c] |= bit(v);
        }
        if (lo == hi) continue;
        std::array<Mask, kMaxOrder> frags;
        int k = 0;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c]) frags[k++] = by_count[c];
        }
        std::memmove(&p.cells[i + k], &p.cells[i + 1], sizeof(Mask) * (p.count - i - 1));
        for (int f = 0; f < k; ++f) {
          p.cells[i + f] = frags[f];
          queue.push(frags[f]);
        }
        p.count += k - 1;
        i += k - 1;
      }
    }
  }

  void search(const Partition& p, int depth) {
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const Mask cell = p.cells[target];

    Mask explored = 0;
    Mask pruned = 0;
    for (Vertex v : VertexSet(cell)) {
      if (pruned & bit(v)) continue;
      Partition child;
      std::memcpy(child.cells.data(), p.cells.data(), sizeof(Mask) * target);
      child.cells[target] = bit(v);
      child.cells[target + 1] = cell & ~bit(v);
      std::memcpy(&child.cells[target + 2], &p.cells[target + 1],
                  sizeof(Mask) * (p.count - target - 1));
      child.count = p.count + 1;
      Queue queue;
      queue.push(bit(v));
      refine(child, queue);

      prefix_[depth] = v;
      search(child, depth + 1);

      explored |= bit(v);
      pruned = orbits_of(explored, depth);
    }
  }

  // Union of the orbits of `seeds` under the stored automorphisms that fix
  // prefix_[0..depth) pointwise.
  Mask orbits_of(Mask seeds, int depth) const {
    std::array<std::uint8_t, kMaxOrder> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& gamma : autos_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gamma[prefix_[d]] == prefix_[d];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
    Mask roots = 0;
    for (Vertex s : VertexSet(seeds)) roots |= bit(find(s));
    Mask out = 0;
    for (int v = 0; v < n_; ++v) {
      if (roots & bit(find(v))) out |= bit(v);
    }
    return out;
  }

  void leaf(const Partition& p) {
    std::array<Vertex, kMaxOrder> order;
    std::array<int, kMaxOrder> pos;
    for (int k = 0; k < n_; ++k) {
      order[k] = std::countr_zero(p.cells[k]);
      pos[order[k]] = k;
    }
    Rows rows{};
    for (int k = 0; k < n_; ++k) {
      Mask r = 0;
      for (Vertex w : g_.neighbours(order[k])) r |= bit(pos[w]);
      rows[k] = r;
    }
    if (!have_best_) {
      have_best_ = true;
      best_rows_ = first_rows_ = rows;
      best_order_ = first_order_ = order;
      return;
    }
    if (rows == first_rows_) record(order, first_order_);
    const int cmp = compare_upper(rows, best_rows_, n_);
    if (cmp == 0) {
      if (best_rows_ != first_rows_) record(order, best_order_);
    } else if (cmp < 0) {
      best_rows_ = rows;
      best_order_ = order;
    }
  }

  // Both labelings produce the same graph, so order[k] -> target[k] is an
  // automorphism.
  void record(const std::array<Vertex, kMaxOrder>& order, const std::array<Vertex, kMaxOrder>& target) {
    if (autos_.size() >= kMaxStoredAutomorphisms) return;
    Perm gamma{};
    bool identity = true;
    for (int k = 0; k < n_; ++k) {
      gamma[order[k]] = static_cast<std::uint8_t>(target[k]);
      identity &= order[k] == target[k];
    }
    if (!identity) autos_.push_back(gamma);
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 256;

  const Graph& g_;
  const int n_;
  std::array<Vertex, kMaxOrder> prefix_{};
  bool have_best_ = false;
  Rows best_rows_{};
  Rows first_rows_{};
  std::array<Vertex, kMaxOrder> best_order_{};
  std::array<Vertex, kMaxOrder> first_order_{};
  std::vector<Perm> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) { return canonical_labeling(g).graph; }

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace cis
