#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "evoverse/uc/executor.hpp"

namespace evoverse::analysis {

// What one run of a procedure on y would hand to the success box.
//   S: positions on the path of trailing-blank halts (h, x[_]) whose tape
//      holds only input symbols once blanks are removed
//   H: those tape strings x
//   E: members of H with |x| = |y|
//   D: members of H with |x| = |y| + 2
struct PathAnalysis {
  uc::ComputationPath path;
  std::vector<std::size_t> halting_positions;
  std::set<std::string> H;
  std::set<std::string> E;
  std::set<std::string> D;
};

// Runs the procedure on a branch of world; the world itself is untouched.
// Budget exhaustion shows up as path.outcome.
PathAnalysis analyze_path(const uc::UniverseComputer& world, const uc::Procedure& procedure,
                          std::string_view y, std::size_t budget);

nlohmann::json to_json(const PathAnalysis& a);

}  // namespace evoverse::analysis
