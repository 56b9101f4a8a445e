#include "evoverse/uc/procedure.hpp"

namespace evoverse::uc {

using nlohmann::json;

std::string Instruction::render() const {
  std::string out = "[(" + from.name() + "," + read + ")->(" + to.name() + "," + write + ",";
  out += to_char(move);
  out += ")]";
  return out;
}

DeterminationViolation::DeterminationViolation(Instruction first, Instruction second)
    : std::invalid_argument("determination condition violated: " + first.render() + " and " +
                            second.render() + " share a key"),
      first_(first),
      second_(second) {}

Alphabet::Alphabet() : symbols_{'0', '1', kBlank} {}

Alphabet::Alphabet(std::string_view extra_symbols) : Alphabet() {
  for (char c : extra_symbols) {
    if (c == '|' || c == '[' || c == ']' || c <= ' ' || c > '~') {
      throw std::invalid_argument(std::string("symbol '") + c + "' cannot be a tape symbol");
    }
    symbols_.insert(c);
  }
}

Procedure Procedure::validate(const std::vector<Instruction>& instructions,
                              const Alphabet& alphabet) {
  Procedure p;
  for (const auto& ins : instructions) {
    for (Symbol s : {ins.read, ins.write}) {
      if (!alphabet.contains(s)) {
        throw std::invalid_argument("instruction " + ins.render() + " uses symbol '" +
                                    std::string(1, s) + "' outside the tape alphabet");
      }
    }
    auto [it, inserted] = p.table_.try_emplace({ins.from, ins.read}, ins);
    if (!inserted && it->second != ins) throw DeterminationViolation(it->second, ins);
  }
  p.fingerprint_ = to_json(p).dump();
  return p;
}

std::optional<Instruction> Procedure::select(const Configuration& c) const {
  if (auto it = table_.find({c.state, c.head}); it != table_.end()) return it->second;
  return std::nullopt;
}

std::vector<Instruction> Procedure::instructions() const {
  std::vector<Instruction> out;
  out.reserve(table_.size());
  for (const auto& [key, ins] : table_) out.push_back(ins);
  return out;
}



json to_json(const Procedure& p) {
  json out = json::array();
  for (const auto& ins : p.instructions()) {
    out.push_back({ins.from.name(), std::string(1, ins.read), ins.to.name(),
                   std::string(1, ins.write), std::string(1, to_char(ins.move))});
  }
  return out;
}

namespace {

Symbol single_symbol(const json& v) {
  if (!v.is_string() || v.get_ref<const std::string&>().size() != 1) {
    throw std::invalid_argument("tape symbol must be a one-character string, got " + v.dump());
  }
  return v.get_ref<const std::string&>()[0];
}

}  // namespace

Procedure procedure_from_json(const json& j, const Alphabet& alphabet) {
  if (j.is_object()) {
    Alphabet declared(j.value("alphabet", std::string()));
    return procedure_from_json(j.at("instructions"), declared);
  }
  if (!j.is_array()) throw std::invalid_argument("procedure must be a JSON list of 5-tuples");
  std::vector<Instruction> instructions;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 5) {
      throw std::invalid_argument("instruction " + t.dump() + " is not [from,read,to,write,move]");
    }
    Instruction ins;
    ins.from = StateId::parse(t[0].get<std::string>());
    ins.read = single_symbol(t[1]);
    ins.to = StateId::parse(t[2].get<std::string>());
    ins.write = single_symbol(t[3]);
    ins.move = move_from_char(single_symbol(t[4]));
    instructions.push_back(ins);
  }
  return Procedure::validate(instructions, alphabet);
}

json to_document(const Procedure& p) {
  std::set<Symbol> extra;
  for (const auto& ins : p.instructions()) {
    for (Symbol s : {ins.read, ins.write}) {
      if (s != '0' && s != '1' && s != kBlank) extra.insert(s);
    }
  }
  return {{"alphabet", std::string(extra.begin(), extra.end())}, {"instructions", to_json(p)}};
}

std::optional<Configuration> rewrite(const Configuration& c, const Instruction& ins) {
  if (c.state != ins.from || c.head != ins.read) return std::nullopt;
  Configuration next;
  next.state = ins.to;
  if (ins.move == Move::Right) {
    next.left = c.left + ins.write;
    if (c.right.empty()) {
      next.head = kBlank;
    } else {
      next.head = c.right.front();
      next.right = c.right.substr(1);
    }
  } else {
    next.right = ins.write + c.right;
    if (c.left.empty()) {
      next.head = kBlank;
    } else {
      next.head = c.left.back();
      next.left = c.left.substr(0, c.left.size() - 1);
    }
  }
  return next;
}

}  // namespace evoverse::uc
