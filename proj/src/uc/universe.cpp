#include "evoverse/uc/universe.hpp"

#include <algorithm>

namespace evoverse::uc {

std::string_view to_string(Box b) { return b == Box::Transition ? "TBOX" : "SBOX"; }
std::string_view to_string(Answer a) { return a == Answer::Yes ? "YES" : "NO"; }

void ClockMeter::charge(Box box, std::size_t config_length, std::uint64_t ticks) {
  ticks_ += ticks;
  log_.push_back({box, config_length, ticks});
}

double ClockMeter::max_effective_slope(std::uint64_t constant) const {
  double best = 0.0;
  for (const auto& c : log_) {
    if (c.config_length == 0 || c.ticks <= constant) continue;
    best = std::max(best, static_cast<double>(c.ticks - constant) /
                              static_cast<double>(c.config_length));
  }
  return best;
}

std::optional<Configuration> UniverseComputer::transition(const Configuration& c,
                                                          const Instruction& ins) {
  meter_.charge(Box::Transition, c.length(), c.length() + 1);
  return rewrite(c, ins);
}

}  // namespace evoverse::uc
