#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "evoverse/uc/executor.hpp"

namespace evoverse::analysis {

class NotAPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SequenceRun {
  std::vector<std::string> inputs;
  std::vector<uc::Outcome> outcomes;
  // No input was answered two different ways within this run.
  bool well_defined = true;
};

struct Divergence {
  std::string input;
  uc::Outcome first = uc::Outcome::Rejected;
  uc::Outcome second = uc::Outcome::Rejected;
};

struct OrderReport {
  std::string backend;
  SequenceRun first;
  SequenceRun second;
  // One entry per distinct input whose verdicts differ, in order of first
  // appearance in the first sequence.
  std::vector<Divergence> divergences;
};

// Runs the procedure (M_scan unless given) over seq_a and over seq_b, each on
// its own branch of base, and compares verdicts input by input. With jobs > 1
// the two branches run on separate threads. Throws NotAPermutation when the
// sequences are not rearrangements of each other, pe::MalformedInput on a
// non-bit input.
OrderReport order_experiment(const std::vector<std::string>& seq_a,
                             const std::vector<std::string>& seq_b,
                             const uc::UniverseComputer& base, std::size_t jobs = 1);
OrderReport order_experiment(const std::vector<std::string>& seq_a,
                             const std::vector<std::string>& seq_b,
                             const uc::UniverseComputer& base, const uc::Procedure& procedure,
                             std::size_t jobs = 1);

nlohmann::json to_json(const OrderReport& r);

struct SweepReport {
  std::size_t permutations = 0;
  std::size_t runs = 0;
  // Orders whose verdicts differ from those of the given order.
  std::vector<std::vector<std::string>> divergent_orders;
};

// order_experiment against every rearrangement of inputs at once. Each
// ordering runs on its own branch of base; orderings that share a prefix
// share the branch up to the end of that prefix, then fork.
SweepReport permutation_sweep(const std::vector<std::string>& inputs,
                              const uc::UniverseComputer& base, const uc::Procedure& procedure);

}  // namespace evoverse::analysis
