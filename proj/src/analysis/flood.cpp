#include "evoverse/analysis/flood.hpp"

#include <algorithm>

#include "evoverse/analysis/strings.hpp"
#include "evoverse/sim/procedures.hpp"

namespace evoverse::analysis {

FloodRefused::FloodRefused(std::size_t n, std::size_t bound)
    : std::domain_error("flood(" + std::to_string(n) + ") exceeds the bound " +
                        std::to_string(bound) + "; it would run M_scan " +
                        std::to_string(std::uint64_t{1} << std::min<std::size_t>(n + 1, 63)) +
                        " times"),
      n_(n) {}

FloodReport flood(sim::EvolutionaryUC& e, std::size_t n, std::size_t bound) {
  if (n > bound) throw FloodRefused(n, bound);
  FloodReport r;
  r.n = n;
  const auto scan = sim::procedures::scan();
  const auto ticks_before = e.evolution_ticks();
  for (auto& v : bit_strings(n + 1)) {
    r.outcomes.push_back(uc::run(e, scan, v, sim::procedures::scan_budget(v.size())).outcome);
    r.queried.push_back(std::move(v));
  }
  r.evolution_ticks = e.evolution_ticks() - ticks_before;
  return r;
}

nlohmann::json to_json(const FloodReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.queried.size(); ++i) {
    rows.push_back({{"input", r.queried[i]}, {"outcome", uc::to_string(r.outcomes[i])}});
  }
  return {{"n", r.n}, {"queries", rows}, {"evolution_ticks", r.evolution_ticks}};
}

}  // namespace evoverse::analysis
