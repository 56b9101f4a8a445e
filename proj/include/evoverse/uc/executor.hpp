#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evoverse/uc/procedure.hpp"
#include "evoverse/uc/universe.hpp"

namespace evoverse::uc {

enum class Outcome { Accepted, Rejected, BudgetExhausted, Suspended };

std::string_view to_string(Outcome o);
Outcome outcome_from_string(std::string_view s);

struct ComputationPath {
  std::vector<Configuration> configs;
  Outcome outcome = Outcome::Suspended;
  std::uint64_t clock_cost = 0;

  // Number of configurations on the path (C_0 counts).
  std::size_t time() const { return configs.size(); }
  std::size_t steps() const { return configs.empty() ? 0 : configs.size() - 1; }
  bool accepted() const { return outcome == Outcome::Accepted; }
  const Configuration& last() const { return configs.back(); }
};

struct Observation {
  Outcome outcome = Outcome::Rejected;
  std::string output;

  bool operator==(const Observation&) const = default;
};

class WellDefinednessViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// What a computist has seen: (procedure, input) -> observed outcome. Only
// completed runs are recorded.
class ExperienceSet {
 public:
  // Throws WellDefinednessViolation if (procedure, input) was already
  // observed with a different outcome.
  void record(const Procedure& m, std::string_view input, const ComputationPath& path);

  std::optional<Observation> lookup(const Procedure& m, std::string_view input) const;
  std::size_t size() const { return entries_.size(); }

  const std::map<std::pair<std::string, std::string>, Observation>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<std::string, std::string>, Observation> entries_;
};

// A resumable execution of a procedure on one input. Each step() performs
// one transition-box call, or the final success-box call once no instruction
// applies. Runs on the same universe-computer may be interleaved freely.
class Run {
 public:
  // Throws pe::MalformedInput for x outside {0,1}*.
  Run(UniverseComputer& uc, Procedure procedure, std::string_view x, std::size_t budget);

  // Returns false once the run has finished.
  bool step();

  // Steps until finished or max_steps box calls were made.
  void resume(std::size_t max_steps);
  ComputationPath finish();

  bool finished() const { return path_.outcome != Outcome::Suspended; }
  const ComputationPath& path() const { return path_; }
  const std::string& input() const { return input_; }
  const Procedure& procedure() const { return procedure_; }

 private:
  UniverseComputer* uc_;
  Procedure procedure_;
  std::string input_;
  std::size_t budget_;
  ComputationPath path_;
};

// Runs M on x to completion (or budget exhaustion) and, when given, records
// the observation in the experience set.
ComputationPath run(UniverseComputer& uc, const Procedure& m, std::string_view x,
                    std::size_t budget, ExperienceSet* experience = nullptr);

// Output y_{C_n} of an accepting run; empty optional on any other outcome.
std::optional<std::string> compute_function(UniverseComputer& uc, const Procedure& m,
                                             std::string_view x, std::size_t budget,
                                             ExperienceSet* experience = nullptr);

}  // namespace evoverse::uc
