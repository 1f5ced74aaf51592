#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qhc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

// Runs the ten acceptance criteria in order, streaming one pass/fail line
// per criterion to `progress` when given.  Criteria are pinned here: grids,
// tolerances, expected values.
std::vector<CriterionResult> run_acceptance(std::ostream* progress);

nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results);

}  // namespace qhc
