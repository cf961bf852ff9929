#include "cis/report_io.hpp"

#include <sstream>

#include "json.hpp"

namespace cis {

namespace {

using Json = nlohmann::ordered_json;

Json count_json(const Count& c) { return c.to_u64(); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json class_json(const GraphClass& cls) {
  Json j;
  j["n"] = cls.n;
  j["c"] = optional_json(cls.c);
  j["p"] = optional_json(cls.p);
  j["two_connected"] = optional_json(cls.two_connected);
  j["minimally_two_connected"] = optional_json(cls.minimally_two_connected);
  j["tree"] = optional_json(cls.tree);
  j["unicyclic"] = optional_json(cls.unicyclic);
  return j;
}

Json extremal_json(const ExtremalReport& r, bool timing) {
  Json j;
  j["class"] = class_json(r.cls);
  j["objective"] = std::string(to_string(r.objective));
  j["optimum"] = count_json(r.optimum);
  j["witnesses"] = r.witnesses;
  j["formula_prediction"] = r.formula_prediction ? count_json(*r.formula_prediction) : Json(nullptr);
  j["prediction_matches"] = optional_json(r.prediction_matches);
  j["class_size"] = r.class_size;
  if (timing) j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

Json cell_json(const TheoremCell& c) {
  Json j;
  j["n"] = c.n;
  j["param_name"] = c.param_name;
  j["param"] = c.param;
  j["class_size"] = optional_json(c.class_size);
  j["observed"] = count_json(c.observed);
  j["expected"] = count_json(c.expected);
  j["relation"] = c.relation;
  j["bound_matched"] = c.bound_matched;
  j["witnesses"] = c.witnesses;
  j["expected_witness"] = optional_json(c.expected_witness);
  j["uniqueness_matched"] = optional_json(c.uniqueness_matched);
  j["pass"] = c.pass;
  return j;
}

Json lemma_json(const LemmaReport& r) {
  Json j;
  j["lemma_id"] = std::string(to_string(r.lemma_id));
  j["instance"] = r.instance;
  j["lhs"] = count_json(r.lhs);
  j["rhs"] = count_json(r.rhs);
  j["relation_claimed"] = std::string(to_string(r.relation_claimed));
  j["relation_observed"] = std::string(to_string(r.relation_observed));
  j["cut_counts_before"] = r.cut_counts_before;
  j["cut_counts_after"] = r.cut_counts_after;
  j["holds"] = r.holds;
  j["equality_condition_matched"] = optional_json(r.equality_condition_matched);
  return j;
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string join_ints(const std::vector<int>& items, char sep) {
  std::vector<std::string> s;
  for (int x : items) s.push_back(std::to_string(x));
  return join(s, sep);
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else {
    return std::to_string(*v);
  }
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_json(const ExtremalReport& report, bool timing) { return extremal_json(report, timing).dump(2) + "\n"; }

std::string to_json(const TheoremReport& report, bool timing) {
  Json j;
  j["theorem_id"] = std::string(to_string(report.id));
  j["n_lo"] = report.n_lo;
  j["n_hi"] = report.n_hi;
  j["advisory"] = report.advisory;
  j["pass"] = report.pass;
  Json cells = Json::array();
  for (const TheoremCell& c : report.cells) cells.push_back(cell_json(c));
  j["cells"] = std::move(cells);
  if (timing) j["elapsed_seconds"] = report.elapsed.count();
  return j.dump(2) + "\n";
}

std::string to_json(const std::vector<OpenProblemRow>& rows, bool timing) {
  Json out = Json::array();
  for (const OpenProblemRow& row : rows) {
    Json j;
    j["n"] = row.n;
    j["c"] = row.c;
    j["report"] = extremal_json(row.report, timing);
    Json structure = Json::array();
    for (const WitnessStructure& w : row.structure) {
      Json s;
      s["graph6"] = w.graph6;
      s["block_orders"] = w.block_orders;
      s["blocks_minimally_two_connected"] = w.blocks_minimal;
      structure.push_back(std::move(s));
    }
    j["structure"] = std::move(structure);
    j["flagged"] = row.flagged;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string to_json(const std::vector<LemmaReport>& reports) {
  Json out = Json::array();
  for (const LemmaReport& r : reports) out.push_back(lemma_json(r));
  return out.dump(2) + "\n";
}

std::string to_csv(const ExtremalReport& r) {
  std::ostringstream out;
  out << "class,objective,optimum,class_size,formula_prediction,prediction_matches,witness_count,witnesses\n";
  std::string prediction = r.formula_prediction ? r.formula_prediction->to_string() : "";
  out << r.cls.describe() << ',' << to_string(r.objective) << ',' << r.optimum << ',' << r.class_size << ','
      << prediction << ',' << opt_text(r.prediction_matches) << ',' << r.witnesses.size() << ','
      << join(r.witnesses, ';') << '\n';
  return out.str();
}

std::string to_csv(const TheoremReport& report) {
  std::ostringstream out;
  out << "theorem_id,n,param_name,param,class_size,observed,expected,relation,bound_matched,"
         "uniqueness_matched,witness_count,witnesses,expected_witness,pass\n";
  for (const TheoremCell& c : report.cells) {
    out << to_string(report.id) << ',' << c.n << ',' << c.param_name << ',' << join_ints(c.param, ';') << ','
        << opt_text(c.class_size) << ',' << c.observed << ',' << c.expected << ',' << c.relation << ','
        << bool_text(c.bound_matched) << ',' << opt_text(c.uniqueness_matched) << ',' << c.witnesses.size() << ','
        << join(c.witnesses, ';') << ',' << opt_text(c.expected_witness) << ',' << bool_text(c.pass) << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<OpenProblemRow>& rows) {
  std::ostringstream out;
  out << "n,c,class_size,minimum,witness_count,witnesses,block_orders,flagged\n";
  for (const OpenProblemRow& row : rows) {
    std::vector<std::string> orders;
    for (const WitnessStructure& w : row.structure) orders.push_back(join_ints(w.block_orders, '+'));
    out << row.n << ',' << row.c << ',' << row.report.class_size << ',' << row.report.optimum << ','
        << row.report.witnesses.size() << ',' << join(row.report.witnesses, ';') << ',' << join(orders, ';') << ','
        << bool_text(row.flagged) << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<LemmaReport>& reports) {
  std::ostringstream out;
  out << "lemma_id,instance,lhs,rhs,relation_claimed,relation_observed,cut_counts_before,cut_counts_after,holds,"
         "equality_condition_matched\n";
  for (const LemmaReport& r : reports) {
    out << to_string(r.lemma_id) << ",\"" << r.instance << "\"," << r.lhs << ',' << r.rhs << ','
        << to_string(r.relation_claimed) << ',' << to_string(r.relation_observed) << ',' << r.cut_counts_before
        << ',' << r.cut_counts_after << ',' << bool_text(r.holds) << ',' << opt_text(r.equality_condition_matched)
        << '\n';
  }
  return out.str();
}

}  // namespace cis
