#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "evoverse/uc/procedure.hpp"

namespace evoverse::uc {

// A single-tape deterministic Turing machine with integer state names.
// The blank is '_'; `halt` plays the role of h.
struct TmRule {
  int state = 0;
  Symbol read = kBlank;
  int next = 0;
  Symbol write = kBlank;
  Move move = Move::Right;
};

struct TMDescription {
  int start = 0;
  int halt = 1;
  std::string extra_symbols;  // alphabet beyond {0,1,_}
  std::vector<TmRule> rules;
};

class NondeterministicMachine : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Transcribes T into a procedure: start -> q0, halt -> h, every other state
// -> q1, q2, ... in ascending order of its integer name. Runs of the result
// match T step for step. Throws NondeterministicMachine when two rules share
// (state, read) with different actions.
Procedure compile_tm(const TMDescription& tm);

}  // namespace evoverse::uc
