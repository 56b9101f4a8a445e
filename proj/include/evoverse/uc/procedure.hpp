#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "evoverse/uc/configuration.hpp"

namespace evoverse::uc {

// [(from, read) -> (to, write, move)]
struct Instruction {
  StateId from = StateId::q(0);
  Symbol read = kBlank;
  StateId to = StateId::halt();
  Symbol write = kBlank;
  Move move = Move::Right;

  std::string render() const;
  auto operator<=>(const Instruction&) const = default;
};

// Two distinct instructions share a (state, symbol) key.
class DeterminationViolation : public std::invalid_argument {
 public:
  DeterminationViolation(Instruction first, Instruction second);
  const Instruction& first() const { return first_; }
  const Instruction& second() const { return second_; }

 private:
  Instruction first_;
  Instruction second_;
};

// Tape alphabet Gamma. Always contains 0, 1 and the blank.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string_view extra_symbols);

  bool contains(Symbol s) const { return symbols_.contains(s); }
  const std::set<Symbol>& symbols() const { return symbols_; }

 private:
  std::set<Symbol> symbols_;
};

// A finite instruction set satisfying the determination condition: at most
// one instruction per (state, symbol) key.
class Procedure {
 public:
  Procedure() = default;

  // Throws DeterminationViolation on a key clash, std::invalid_argument if an
  // instruction uses a symbol outside the alphabet. Exact duplicates collapse.
  static Procedure validate(const std::vector<Instruction>& instructions,
                            const Alphabet& alphabet = Alphabet());

  // The unique instruction keyed by (c.state, c.head), if any.
  std::optional<Instruction> select(const Configuration& c) const;

  std::vector<Instruction> instructions() const;
  std::size_t size() const { return table_.size(); }
  bool empty() const { return table_.empty(); }

  // Stable textual identity: the sorted instruction list as JSON.
  const std::string& fingerprint() const { return fingerprint_; }

  bool operator==(const Procedure& other) const { return table_ == other.table_; }

 private:
  std::map<std::pair<StateId, Symbol>, Instruction> table_;
  std::string fingerprint_ = "[]";
};

// File format: JSON list of [from, read, to, write, move] string tuples.
nlohmann::json to_json(const Procedure& p);
Procedure procedure_from_json(const nlohmann::json& j, const Alphabet& alphabet = Alphabet());

// Self-describing form {alphabet: extra symbols used, instructions: [...]},
// readable by procedure_from_json without a separate alphabet.
nlohmann::json to_document(const Procedure& p);

// The configuration rewrite shared by every transition box. Empty when the
// instruction's key does not match c.
std::optional<Configuration> rewrite(const Configuration& c, const Instruction& ins);

}  // namespace evoverse::uc
