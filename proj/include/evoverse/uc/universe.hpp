#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "evoverse/uc/configuration.hpp"
#include "evoverse/uc/procedure.hpp"

namespace evoverse::uc {

enum class Box { Transition, Success };
enum class Answer { No, Yes };

std::string_view to_string(Box b);
std::string_view to_string(Answer a);

struct ClockCharge {
  Box box = Box::Transition;
  std::size_t config_length = 0;
  std::uint64_t ticks = 0;
};

// Backend-declared linear cost envelope: ticks <= per_symbol * |C| + constant.
struct LinearBound {
  std::uint64_t per_symbol = 1;
  std::uint64_t constant = 1;

  bool admits(const ClockCharge& c) const {
    return c.ticks <= per_symbol * c.config_length + constant;
  }
};

class ClockMeter {
 public:
  void charge(Box box, std::size_t config_length, std::uint64_t ticks);

  std::uint64_t ticks() const { return ticks_; }
  const std::vector<ClockCharge>& log() const { return log_; }

  // Largest (ticks - constant) / |C| seen so far.
  double max_effective_slope(std::uint64_t constant) const;

 private:
  std::uint64_t ticks_ = 0;
  std::vector<ClockCharge> log_;
};

// A universe-computer: an opaque transition box and success box sharing a
// clock. The transition box is the same Turing-style rewrite for every
// backend; backends differ only in how the success box answers.
class UniverseComputer {
 public:
  virtual ~UniverseComputer() = default;

  // TBOX. Empty optional is the undefined result. Charges |C| + 1 ticks.
  std::optional<Configuration> transition(const Configuration& c, const Instruction& ins);

  // SBOX. May evolve the backend.
  virtual Answer success(const Configuration& c) = 0;

  virtual LinearBound clock_bound() const = 0;

  // Independent deep copy. Queries on the copy never affect this instance.
  virtual std::unique_ptr<UniverseComputer> branch() const = 0;

  virtual std::string_view kind() const = 0;

  // Structural additions made by the backend so far; zero for static boxes.
  virtual std::uint64_t evolution_ticks() const { return 0; }

  const ClockMeter& meter() const { return meter_; }

 protected:
  ClockMeter meter_;
};

}  // namespace evoverse::uc
