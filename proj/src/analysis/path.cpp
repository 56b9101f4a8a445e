#include "evoverse/analysis/path.hpp"

namespace evoverse::analysis {

PathAnalysis analyze_path(const uc::UniverseComputer& world, const uc::Procedure& procedure,
                          std::string_view y, std::size_t budget) {
  auto scratch = world.branch();
  PathAnalysis a;
  a.path = uc::run(*scratch, procedure, y, budget);
  for (std::size_t i = 0; i < a.path.configs.size(); ++i) {
    const auto& c = a.path.configs[i];
    if (!uc::is_trailing_blank_halt(c)) continue;
    auto x = uc::halted_input_string(c);
    if (!x) continue;
    a.halting_positions.push_back(i);
    a.H.insert(*x);
    if (x->size() == y.size()) a.E.insert(*x);
    if (x->size() == y.size() + 2) a.D.insert(*x);
  }
  return a;
}

nlohmann::json to_json(const PathAnalysis& a) {
  nlohmann::json halting = nlohmann::json::array();
  for (auto i : a.halting_positions) halting.push_back(a.path.configs[i].render());
  return {{"outcome", uc::to_string(a.path.outcome)},
          {"time", a.path.time()},
          {"halting_configs", halting},
          {"H", a.H},
          {"E", a.E},
          {"D", a.D}};
}

}  // namespace evoverse::analysis
