#include "evoverse/pe/counter_process.hpp"

namespace evoverse::pe {

CounterProcess::Value CounterProcess::evaluate(Value n) {
  auto [it, inserted] = assigned_.try_emplace(n, assigned_.size() + 1);
  return it->second;
}

std::optional<CounterProcess::Value> CounterProcess::lookup(Value n) const {
  if (auto it = assigned_.find(n); it != assigned_.end()) return it->second;
  return std::nullopt;
}

}  // namespace evoverse::pe
