#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "evoverse/sim/evolutionary_uc.hpp"
#include "evoverse/uc/executor.hpp"

namespace evoverse::analysis {

inline constexpr std::size_t kDefaultFloodBound = 10;

class FloodRefused : public std::domain_error {
 public:
  FloodRefused(std::size_t n, std::size_t bound);
  std::size_t n() const { return n_; }
  // Number of M_scan runs the flood would have made.
  std::uint64_t estimated_queries() const { return std::uint64_t{1} << (n_ + 1); }

 private:
  std::size_t n_;
};

struct FloodReport {
  std::size_t n = 0;
  std::vector<std::string> queried;
  std::vector<uc::Outcome> outcomes;
  std::uint64_t evolution_ticks = 0;
};

// Runs M_scan on every string of length n+1, lexicographically, on e itself.
// Afterwards every length-n string is rejected by M_scan on e.
FloodReport flood(sim::EvolutionaryUC& e, std::size_t n, std::size_t bound = kDefaultFloodBound);

nlohmann::json to_json(const FloodReport& r);

}  // namespace evoverse::analysis
