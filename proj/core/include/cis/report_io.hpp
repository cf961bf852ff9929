#pragma once

#include <string>
#include <vector>

#include "cis/enumeration.hpp"
#include "cis/transforms.hpp"

namespace cis {

// JSON documents with a fixed key order. Wall-clock fields are written only
// when `timing` is set, so that reruns produce identical bytes.
std::string to_json(const ExtremalReport& report, bool timing = false);
std::string to_json(const TheoremReport& report, bool timing = false);
std::string to_json(const std::vector<OpenProblemRow>& rows, bool timing = false);
std::string to_json(const std::vector<LemmaReport>& reports);

// One header line, then one row per cell.
std::string to_csv(const ExtremalReport& report);
std::string to_csv(const TheoremReport& report);
std::string to_csv(const std::vector<OpenProblemRow>& rows);
std::string to_csv(const std::vector<LemmaReport>& reports);

}  // namespace cis
