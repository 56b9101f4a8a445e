#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "evoverse/pe/counter_process.hpp"

namespace evoverse::analysis {

// A finite observation of a black box: (input, output) pairs in the order
// they were seen.
struct TraceSet {
  std::vector<std::pair<std::string, std::string>> pairs;
};

struct WellDefinedness {
  bool ok = true;
  // Set on a violation: the input and its two outputs, earliest first.
  std::string input;
  std::string first;
  std::string second;
};

WellDefinedness check_well_defined(const TraceSet& trace);

class IllDefinedTrace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Static side: a finite transducer laid out as a binary trie. Each node is a
// state; outputs sit on the nodes reached by recorded inputs. Unrecorded
// inputs get the default output. Answers never depend on call order.
class TableMachine {
 public:
  explicit TableMachine(const TraceSet& trace, std::string default_output = "NO");

  std::string answer(std::string_view input) const;
  std::size_t state_count() const { return nodes_.size(); }
  nlohmann::json listing() const;

 private:
  struct Node {
    std::optional<std::size_t> child[2];
    std::optional<std::string> output;
  };
  std::vector<Node> nodes_;
  std::string default_output_;
};

// Evolutionary side: a counter process g over inputs read as naturals
// (x -> int("1"x, 2) - 1). Seeding queries g on the trace inputs in order, so
// the i-th distinct input gets g = i and its recorded output. An unseen input
// extends g and is given fallback[g mod |fallback|], fixed from then on.
class SeededEvolvingBox {
 public:
  explicit SeededEvolvingBox(const TraceSet& trace, std::string default_output = "NO");

  // Evolves on unseen inputs. Throws pe::MalformedInput on non-bit input or
  // input longer than 63 bits.
  std::string answer(std::string_view input);
  const pe::CounterProcess& counter() const { return g_; }
  nlohmann::json listing() const;

  static std::uint64_t encode(std::string_view input);

 private:
  pe::CounterProcess g_;
  std::map<pe::CounterProcess::Value, std::string> outputs_;
  std::map<pe::CounterProcess::Value, std::string> inputs_;
  std::vector<std::string> fallback_;
};

struct RealizabilityPair {
  TableMachine static_machine;
  SeededEvolvingBox evolutionary_machine;
};

// Builds both machines and checks each against every pair (on throwaway
// copies) before returning. Throws IllDefinedTrace when an input has two
// outputs.
RealizabilityPair realize(const TraceSet& trace);

// Replays the trace through both machines of a pair (on copies); true when
// every answer matches.
bool reproduces(const RealizabilityPair& pair, const TraceSet& trace);

nlohmann::json to_json(const TraceSet& trace);
TraceSet trace_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RealizabilityPair& pair);

}  // namespace evoverse::analysis
