#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cis/count.hpp"
#include "cis/graph.hpp"

namespace cis {

// Orders above this are refused by every exhaustive routine.
inline constexpr int kMaxEnumerationOrder = 12;
// Levels up to this order are kept in memory once generated; larger orders
// are streamed from their parents.
inline constexpr int kCachedEnumerationOrder = 9;

// 0 means "all hardware threads".
int resolve_workers(int requested);

// One representative per isomorphism class of connected graphs of order n,
// each in canonical labelling, in a deterministic order. Throws
// OrderOutOfRange outside [1, kCachedEnumerationOrder].
const std::vector<Graph>& enumerate_connected(int n);

// Calls visit(g, worker) once per class, concurrently from up to `workers`
// threads. Orders up to kMaxEnumerationOrder.
void for_each_connected(int n, int workers, const std::function<void(const Graph&, int)>& visit);

// Canonical children of a canonical connected parent: graphs of order
// n(parent)+1 whose canonical deletion yields this parent. Sorted.
std::vector<Graph> augment(const Graph& parent);

// Independent check: every labelled graph on n vertices, filtered for
// connectivity and deduplicated by canonical_form. n <= 7.
std::vector<Graph> connected_graphs_by_sweep(int n);

struct GraphClass {
  int n = 0;
  std::optional<int> c;
  std::optional<int> p;
  std::optional<bool> two_connected;
  std::optional<bool> minimally_two_connected;
  std::optional<bool> tree;
  // Exactly one cycle (m = n). Needed for the unicyclic lower bound.
  std::optional<bool> unicyclic;

  // Throws BadClass for contradictory constraints.
  void validate() const;
  bool matches(const Graph& g) const;
  std::string describe() const;
};

enum class Objective { Min, Max };
std::string_view to_string(Objective o);

struct ExtremalReport {
  GraphClass cls;
  Objective objective = Objective::Min;
  Count optimum;
  // graph6 of the canonical representatives, sorted.
  std::vector<std::string> witnesses;
  std::optional<Count> formula_prediction;
  std::optional<bool> prediction_matches;
  std::size_t class_size = 0;
  std::chrono::duration<double> elapsed{};
};

std::size_t count_class(const GraphClass& cls, int workers = 0);

// Throws EmptyClass when nothing matches.
ExtremalReport extremal_search(const GraphClass& cls, Objective objective, int workers = 0);

// The closed form the paper gives for this class and objective, if any.
std::optional<Count> formula_for(const GraphClass& cls, Objective objective);

enum class TheoremId {
  Main1Cut,
  Main2Cut,
  MinUniN,
  MaxNP,
  MinPPend,
  TheoP0,
  PropTadpole,
  Minimally2ConnCounts,
  // Spider trees maximise the count among trees with p leaves. Reported but
  // never counted as a failure.
  TreeSpiderMax,
};

std::string_view to_string(TheoremId id);
TheoremId parse_theorem_id(std::string_view text);  // ParseError
const std::vector<TheoremId>& all_theorem_ids();

struct TheoremCell {
  int n = 0;
  std::string param_name;  // "c", "p", "l,r", "l" or empty
  std::vector<int> param;
  std::optional<std::size_t> class_size;
  Count observed;  // exhaustive optimum, or a count / class count
  Count expected;  // formula value, or the right-hand side of a strict claim
  std::string relation;  // "=" or ">"
  bool bound_matched = false;
  std::vector<std::string> witnesses;
  std::optional<std::string> expected_witness;
  std::optional<bool> uniqueness_matched;
  bool pass = false;
};

struct TheoremReport {
  TheoremId id = TheoremId::Main1Cut;
  int n_lo = 0;
  int n_hi = 0;
  bool advisory = false;
  std::vector<TheoremCell> cells;
  bool pass = false;
  std::chrono::duration<double> elapsed{};
};

// Default orders checked by `verify` when no range is given.
std::pair<int, int> default_range(TheoremId id);

TheoremReport verify_theorem(TheoremId id, int n_lo, int n_hi, int workers = 0);

struct WitnessStructure {
  std::string graph6;
  std::vector<int> block_orders;  // descending
  bool blocks_minimal = false;    // every block is an edge or minimally 2-connected
};

struct OpenProblemRow {
  int n = 0;
  int c = 0;
  ExtremalReport report;
  std::vector<WitnessStructure> structure;
  // Set when some witness has a block that is neither an edge nor minimally
  // 2-connected.
  bool flagged = false;
};

std::vector<OpenProblemRow> open_problem_scan(int n_lo, int n_hi, int workers = 0);

}  // namespace cis
