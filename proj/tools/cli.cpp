#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cis/counting.hpp"
#include "cis/enumeration.hpp"
#include "cis/error.hpp"
#include "cis/families.hpp"
#include "cis/graph.hpp"
#include "cis/report_io.hpp"
#include "cis/transforms.hpp"
#include "json.hpp"

namespace cis {

namespace {

enum class Format { Text, Json, Csv };

constexpr std::uint64_t kDefaultSeed = 20190731;

struct RunConfig {
  Format format = Format::Text;
  int workers = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  int n_cap = 10;
  bool timing = false;
  bool verbose = false;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

void check_cap(int n_hi, const RunConfig& cfg) {
  if (n_hi > cfg.n_cap) {
    throw Error(ErrorKind::OrderOutOfRange, "order " + std::to_string(n_hi) + " exceeds --n-cap " +
                                                std::to_string(cfg.n_cap) + " (raise it to opt in)");
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string optional_yes_no(const std::optional<bool>& b) { return b ? yes_no(*b) : "-"; }

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  std::vector<std::string> graph6;
  std::string family;
  std::string edge_list;
  std::string input;
  std::optional<int> root;
  std::vector<int> roots;
};

int cmd_count(const CountArgs& a, const RunConfig& cfg, std::ostream& os) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const std::string& text : a.graph6) graphs.emplace_back(text, from_graph6(text));
  if (!a.family.empty()) {
    const FamilySpec spec = FamilySpec::parse(a.family);
    const Graph g = build(spec);
    graphs.emplace_back(to_graph6(g), g);
  }
  if (!a.edge_list.empty()) {
    const Graph g = parse_edge_list(read_source(a.edge_list));
    graphs.emplace_back(to_graph6(g), g);
  }
  if (!a.input.empty() || graphs.empty()) {
    for (const Graph& g : parse_graph6_lines(read_source(a.input.empty() ? "-" : a.input))) {
      graphs.emplace_back(to_graph6(g), g);
    }
  }

  nlohmann::ordered_json json = nlohmann::ordered_json::array();
  if (cfg.format == Format::Csv) os << "graph6,order,count\n";
  for (const auto& [label, g] : graphs) {
    Count value;
    if (a.root) {
      value = count_cis_rooted(g, *a.root);
    } else if (a.roots.size() == 2) {
      value = count_cis_rooted2(g, a.roots[0], a.roots[1]);
    } else {
      value = count_cis(g);
    }
    switch (cfg.format) {
      case Format::Text:
        os << value << '\n';
        break;
      case Format::Csv:
        os << label << ',' << g.order() << ',' << value << '\n';
        break;
      case Format::Json: {
        nlohmann::ordered_json j;
        j["graph6"] = label;
        j["order"] = g.order();
        if (a.root) j["root"] = *a.root;
        if (a.roots.size() == 2) j["roots"] = a.roots;
        j["count"] = value.to_u64();
        json.push_back(std::move(j));
        break;
      }
    }
  }
  if (cfg.format == Format::Json) os << json.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// build

int cmd_build(const std::string& spec_text, const RunConfig& cfg, std::ostream& os) {
  const FamilySpec spec = FamilySpec::parse(spec_text);
  const Graph g = build(spec);
  const auto formula = family_formula(spec);
  switch (cfg.format) {
    case Format::Text:
      os << to_graph6(g) << '\n';
      break;
    case Format::Csv:
      os << "spec,graph6,order,edges\n" << spec.to_string() << ',' << to_graph6(g) << ',' << g.order() << ','
         << g.edge_count() << '\n';
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["spec"] = spec.to_string();
      j["graph6"] = to_graph6(g);
      j["order"] = g.order();
      j["edges"] = g.edge_count();
      j["formula"] = formula ? nlohmann::ordered_json(formula->to_u64()) : nlohmann::ordered_json(nullptr);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

void render_theorem_text(const TheoremReport& r, bool timing, std::ostream& os) {
  os << to_string(r.id) << " n=" << r.n_lo << ".." << r.n_hi << ": " << (r.pass ? "PASS" : "FAIL")
     << (r.advisory ? " (advisory)" : "");
  if (timing) os << " in " << std::fixed << std::setprecision(2) << r.elapsed.count() << "s";
  os << '\n';
  os << std::left << std::setw(4) << "n" << std::setw(14) << "param" << std::right << std::setw(9) << "class"
     << std::setw(12) << "observed" << std::setw(4) << "" << std::setw(12) << "expected" << "  unique  pass\n";
  for (const TheoremCell& c : r.cells) {
    std::string param = c.param_name;
    if (!c.param.empty()) {
      param += "=";
      for (std::size_t i = 0; i < c.param.size(); ++i) param += (i ? "," : "") + std::to_string(c.param[i]);
    }
    os << std::left << std::setw(4) << c.n << std::setw(14) << param << std::right << std::setw(9)
       << (c.class_size ? std::to_string(*c.class_size) : "-") << std::setw(12) << c.observed.to_string()
       << std::setw(4) << c.relation << std::setw(12) << c.expected.to_string() << std::setw(8)
       << optional_yes_no(c.uniqueness_matched) << std::setw(6) << yes_no(c.pass) << '\n';
    if (!c.pass && !c.witnesses.empty()) {
      os << "    witnesses:";
      for (const std::string& w : c.witnesses) os << ' ' << w;
      if (c.expected_witness) os << "  expected: " << *c.expected_witness;
      os << '\n';
    }
  }
}

int cmd_verify(const std::string& id_text, std::optional<int> n_lo, std::optional<int> n_hi, const RunConfig& cfg,
               std::ostream& os) {
  const TheoremId id = parse_theorem_id(id_text);
  const auto [lo, hi] = default_range(id);
  const int from = n_lo.value_or(lo);
  const int to = n_hi.value_or(hi);
  if (id != TheoremId::PropTadpole) check_cap(to, cfg);
  const TheoremReport report = verify_theorem(id, from, to, cfg.workers);
  switch (cfg.format) {
    case Format::Text: render_theorem_text(report, cfg.timing, os); break;
    case Format::Json: os << to_json(report, cfg.timing); break;
    case Format::Csv: os << to_csv(report); break;
  }
  return report.pass || report.advisory ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  int n = 0;
  std::optional<int> c;
  std::optional<int> p;
  bool two_connected = false;
  bool minimally_two_connected = false;
  bool tree = false;
  bool unicyclic = false;
  std::string objective;
};

int cmd_search(const SearchArgs& a, const RunConfig& cfg, std::ostream& os) {
  check_cap(a.n, cfg);
  GraphClass cls;
  cls.n = a.n;
  cls.c = a.c;
  cls.p = a.p;
  if (a.two_connected) cls.two_connected = true;
  if (a.minimally_two_connected) cls.minimally_two_connected = true;
  if (a.tree) cls.tree = true;
  if (a.unicyclic) cls.unicyclic = true;
  const Objective objective = a.objective == "max" ? Objective::Max : Objective::Min;
  const ExtremalReport r = extremal_search(cls, objective, cfg.workers);
  switch (cfg.format) {
    case Format::Text:
      os << "class: " << r.cls.describe() << '\n'
         << "objective: " << to_string(r.objective) << '\n'
         << "class size: " << r.class_size << '\n'
         << "optimum: " << r.optimum << '\n';
      if (r.formula_prediction) {
        os << "formula: " << *r.formula_prediction << (*r.prediction_matches ? " (matches)" : " (MISMATCH)") << '\n';
      }
      if (cfg.timing) os << "elapsed: " << std::fixed << std::setprecision(2) << r.elapsed.count() << "s\n";
      os << "witnesses (" << r.witnesses.size() << "):\n";
      for (const std::string& w : r.witnesses) os << "  " << w << '\n';
      break;
    case Format::Json: os << to_json(r, cfg.timing); break;
    case Format::Csv: os << to_csv(r); break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lemma

struct LemmaArgs {
  std::string id;
  int trials = 200;
  int order_budget = 16;
  std::optional<int> n;
  bool exhaustive = false;
  int max_order = 7;
};

void render_lemma_line(const LemmaReport& r, std::ostream& os) {
  os << (r.holds ? "holds  " : "FAILS  ") << r.instance << "  N: " << r.lhs << ' ' << to_string(r.relation_observed)
     << ' ' << r.rhs << " (claimed " << to_string(r.relation_claimed) << ")  c: " << r.cut_counts_before << " -> "
     << r.cut_counts_after;
  if (r.equality_condition_matched) os << "  equality condition " << (*r.equality_condition_matched ? "matched" : "MISMATCHED");
  os << '\n';
}

int cmd_lemma(const LemmaArgs& a, const RunConfig& cfg, std::ostream& os) {
  const LemmaId id = parse_lemma_id(a.id);
  std::vector<LemmaInstance> instances;
  enum class Mode { Random, Chain, Exhaustive } mode = Mode::Random;
  if (a.exhaustive) {
    if (id != LemmaId::PathOrder) throw CLI::ValidationError("--exhaustive", "only path_order has an exhaustive sweep");
    mode = Mode::Exhaustive;
    instances = path_order_instances(a.max_order);
  } else if (a.n) {
    if (id != LemmaId::OneCut) throw CLI::ValidationError("--n", "only one_cut takes --n");
    mode = Mode::Chain;
    instances = one_cut_chain(*a.n);
  } else {
    std::mt19937_64 trial_seeds(cfg.seed);
    for (int i = 0; i < a.trials; ++i) instances.push_back(random_instance(id, a.order_budget, trial_seeds()));
  }

  std::vector<LemmaReport> reports;
  reports.reserve(instances.size());
  for (const LemmaInstance& inst : instances) reports.push_back(check(inst));
  const auto holding = std::count_if(reports.begin(), reports.end(), [](const LemmaReport& r) { return r.holds; });
  const bool all_hold = holding == static_cast<long>(reports.size());

  switch (cfg.format) {
    case Format::Json: os << to_json(reports); break;
    case Format::Csv: os << to_csv(reports); break;
    case Format::Text: {
      for (const LemmaReport& r : reports) {
        if (cfg.verbose || !r.holds || mode == Mode::Chain) render_lemma_line(r, os);
      }
      if (mode == Mode::Chain && !reports.empty()) {
        os << "chain n=" << *a.n << ": " << reports.front().lhs;
        for (const LemmaReport& r : reports) os << ' ' << to_string(r.relation_observed) << ' ' << r.rhs;
        os << '\n';
      }
      if (mode == Mode::Exhaustive) {
        const auto matched = std::count_if(reports.begin(), reports.end(), [](const LemmaReport& r) {
          return r.equality_condition_matched.value_or(false);
        });
        const auto equal = std::count_if(reports.begin(), reports.end(),
                                         [](const LemmaReport& r) { return r.relation_observed == Relation::Equal; });
        os << "equality condition matched in " << matched << "/" << reports.size() << " instances (" << equal
           << " with equal counts)\n";
      }
      os << to_string(id) << ": " << holding << "/" << reports.size() << " hold\n";
      break;
    }
  }
  return all_hold ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------
// scan

int cmd_scan(int n_lo, int n_hi, const RunConfig& cfg, std::ostream& os) {
  check_cap(n_hi, cfg);
  const std::vector<OpenProblemRow> rows = open_problem_scan(n_lo, n_hi, cfg.workers);
  switch (cfg.format) {
    case Format::Json: os << to_json(rows, cfg.timing); break;
    case Format::Csv: os << to_csv(rows); break;
    case Format::Text:
      for (const OpenProblemRow& row : rows) {
        os << "n=" << row.n << " c=" << row.c << "  min " << row.report.optimum << "  over "
           << row.report.class_size << " graphs, " << row.report.witnesses.size() << " witness(es)"
           << (row.flagged ? "  FLAGGED" : "") << '\n';
        for (const WitnessStructure& w : row.structure) {
          os << "    " << w.graph6 << "  blocks";
          for (int b : w.block_orders) os << ' ' << b;
          os << (w.blocks_minimal ? "" : "  (non-minimal block)") << '\n';
        }
      }
      break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of connected induced subgraphs, extremal families and exhaustive checks"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")
      ->envname("CIS_WORKERS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "Seed for random lemma instances");
  app.add_option("--output,-o", cfg.output, "Write to this file instead of standard output");
  app.add_option("--n-cap", cfg.n_cap, "Largest order an exhaustive command may enumerate")
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  app.add_flag("--timing", cfg.timing, "Include wall-clock times");
  app.add_flag("--verbose,-v", cfg.verbose, "Print every lemma report in text mode");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count connected induced subgraphs");
  count->add_option("--graph6", count_args.graph6, "Graph in graph6 (repeatable)");
  count->add_option("--family", count_args.family, "Family member, e.g. double_tadpole(8,3,3)");
  count->add_option("--edge-list", count_args.edge_list, "Edge-list file ('-' for stdin)");
  count->add_option("--input", count_args.input, "File of graph6 lines ('-' for stdin)");
  auto* root_opt = count->add_option("--root", count_args.root, "Count only subgraphs containing this vertex");
  count->add_option("--roots", count_args.roots, "Count only subgraphs containing both vertices")
      ->expected(2)
      ->excludes(root_opt);

  std::string build_spec;
  auto* build_cmd = app.add_subcommand("build", "Print the graph6 of a family member");
  build_cmd->add_option("spec", build_spec, "Family spec, e.g. two_cliques(7,3)")->required();

  std::string theorem;
  std::optional<int> n_lo;
  std::optional<int> n_hi;
  auto* verify = app.add_subcommand("verify", "Exhaustively check a theorem over a range of orders");
  verify->add_option("theorem", theorem, "Theorem id")->required();
  verify->add_option("--n-lo", n_lo, "Smallest order");
  verify->add_option("--n-hi", n_hi, "Largest order");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exact optimum and all optimal graphs of a class");
  search->add_option("--n", search_args.n, "Order")->required();
  search->add_option("--c", search_args.c, "Number of cut vertices");
  search->add_option("--p", search_args.p, "Number of pendant vertices");
  search->add_flag("--two-connected", search_args.two_connected);
  search->add_flag("--minimally-two-connected", search_args.minimally_two_connected);
  search->add_flag("--tree", search_args.tree);
  search->add_flag("--unicyclic", search_args.unicyclic);
  search->add_option("--objective", search_args.objective, "min or max")
      ->required()
      ->check(CLI::IsMember({"min", "max"}));

  LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand("lemma", "Check a transformation lemma on concrete instances");
  lemma->add_option("lemma", lemma_args.id, "Lemma id")->required();
  lemma->add_option("--trials", lemma_args.trials, "Random instances to check")->check(CLI::NonNegativeNumber);
  lemma->add_option("--order-budget", lemma_args.order_budget, "Largest instance order")->check(CLI::Range(2, kMaxOrder));
  lemma->add_option("--n", lemma_args.n, "one_cut: check the whole chain at this order");
  lemma->add_flag("--exhaustive", lemma_args.exhaustive, "path_order: sweep every small instance");
  lemma->add_option("--max-order", lemma_args.max_order, "path_order sweep: bound on n1 + n2");

  int scan_lo = 4;
  int scan_hi = 7;
  auto* scan = app.add_subcommand("scan", "Minimum counts for graphs with c > 0 cut vertices, with witnesses");
  scan->add_option("--n-lo", scan_lo, "Smallest order");
  scan->add_option("--n-hi", scan_hi, "Largest order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& os = cfg.output.empty() ? out : file;

  try {
    if (*count) return cmd_count(count_args, cfg, os);
    if (*build_cmd) return cmd_build(build_spec, cfg, os);
    if (*verify) return cmd_verify(theorem, n_lo, n_hi, cfg, os);
    if (*search) return cmd_search(search_args, cfg, os);
    if (*lemma) return cmd_lemma(lemma_args, cfg, os);
    if (*scan) return cmd_scan(scan_lo, scan_hi, cfg, os);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cis
