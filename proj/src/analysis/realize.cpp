#include "evoverse/analysis/realize.hpp"

#include <map>
#include <set>

#include "evoverse/pe/automaton.hpp"

namespace evoverse::analysis {

WellDefinedness check_well_defined(const TraceSet& trace) {
  std::map<std::string, std::string> seen;
  for (const auto& [in, out] : trace.pairs) {
    auto [it, fresh] = seen.try_emplace(in, out);
    if (!fresh && it->second != out) return {false, in, it->second, out};
  }
  return {};
}

TableMachine::TableMachine(const TraceSet& trace, std::string default_output)
    : nodes_(1), default_output_(std::move(default_output)) {
  for (const auto& [in, out] : trace.pairs) {
    pe::require_bits(in);
    std::size_t at = 0;
    for (char c : in) {
      const int bit = c - '0';
      if (!nodes_[at].child[bit]) {
        nodes_[at].child[bit] = nodes_.size();
        nodes_.emplace_back();
      }
      at = *nodes_[at].child[bit];
    }
    if (!nodes_[at].output) nodes_[at].output = out;
  }
}

std::string TableMachine::answer(std::string_view input) const {
  pe::require_bits(input);
  std::size_t at = 0;
  for (char c : input) {
    auto next = nodes_[at].child[c - '0'];
    if (!next) return default_output_;
    at = *next;
  }
  return nodes_[at].output.value_or(default_output_);
}

nlohmann::json TableMachine::listing() const {
  nlohmann::json transitions = nlohmann::json::array();
  nlohmann::json outputs = nlohmann::json::array();
  for (std::size_t s = 0; s < nodes_.size(); ++s) {
    for (int bit : {0, 1}) {
      if (nodes_[s].child[bit]) transitions.push_back({s, bit, *nodes_[s].child[bit]});
    }
    if (nodes_[s].output) outputs.push_back({{"state", s}, {"output", *nodes_[s].output}});
  }
  return {{"kind", "static"},
          {"states", nodes_.size()},
          {"start", 0},
          {"transitions", transitions},
          {"outputs", outputs},
          {"default_output", default_output_}};
}

std::uint64_t SeededEvolvingBox::encode(std::string_view input) {
  pe::require_bits(input);
  if (input.size() > 63) throw pe::MalformedInput("input longer than 63 bits");
  std::uint64_t v = 1;
  for (char c : input) v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  return v - 1;
}

SeededEvolvingBox::SeededEvolvingBox(const TraceSet& trace, std::string default_output) {
  std::set<std::string> distinct;
  for (const auto& [in, out] : trace.pairs) {
    const auto v = g_.evaluate(encode(in));
    outputs_.try_emplace(v, out);
    inputs_.try_emplace(v, in);
    distinct.insert(out);
  }
  fallback_.assign(distinct.begin(), distinct.end());
  if (fallback_.empty()) fallback_.push_back(std::move(default_output));
}

std::string SeededEvolvingBox::answer(std::string_view input) {
  const auto v = g_.evaluate(encode(input));
  auto [it, fresh] = outputs_.try_emplace(v, fallback_[v % fallback_.size()]);
  if (fresh) inputs_.emplace(v, std::string(input));
  return it->second;
}

nlohmann::json SeededEvolvingBox::listing() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [v, out] : outputs_) {
    const auto& in = inputs_.at(v);
    rows.push_back({{"input", in}, {"n", encode(in)}, {"g", v}, {"output", out}});
  }
  return {{"kind", "evolutionary"}, {"assignments", rows}, {"fallback", fallback_}};
}

RealizabilityPair realize(const TraceSet& trace) {
  if (auto wd = check_well_defined(trace); !wd.ok) {
    throw IllDefinedTrace("input '" + wd.input + "' observed as both '" + wd.first + "' and '" +
                          wd.second + "'");
  }
  RealizabilityPair pair{TableMachine(trace), SeededEvolvingBox(trace)};
  if (!reproduces(pair, trace)) {
    throw std::logic_error("realized machines disagree with the trace");
  }
  return pair;
}

bool reproduces(const RealizabilityPair& pair, const TraceSet& trace) {
  auto evolving = pair.evolutionary_machine;
  for (const auto& [in, out] : trace.pairs) {
    if (pair.static_machine.answer(in) != out) return false;
    if (evolving.answer(in) != out) return false;
  }
  return true;
}

nlohmann::json to_json(const TraceSet& trace) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [in, out] : trace.pairs) rows.push_back({{"input", in}, {"output", out}});
  return rows;
}

TraceSet trace_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("trace must be a JSON list");
  TraceSet t;
  for (const auto& row : j) {
    if (row.is_array() && row.size() == 2) {
      t.pairs.emplace_back(row[0].get<std::string>(), row[1].get<std::string>());
    } else if (row.is_object()) {
      t.pairs.emplace_back(row.at("input").get<std::string>(), row.at("output").get<std::string>());
    } else {
      throw std::invalid_argument("trace entry " + row.dump() + " is not {input, output}");
    }
  }
  return t;
}

nlohmann::json to_json(const RealizabilityPair& pair) {
  return {{"static_machine", pair.static_machine.listing()},
          {"evolutionary_machine", pair.evolutionary_machine.listing()}};
}

}  // namespace evoverse::analysis
