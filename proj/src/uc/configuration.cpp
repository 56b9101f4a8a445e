#include "evoverse/uc/configuration.hpp"

#include <charconv>

namespace evoverse::uc {

char to_char(Move m) { return m == Move::Left ? 'L' : 'R'; }

Move move_from_char(char c) {
  if (c == 'L') return Move::Left;
  if (c == 'R') return Move::Right;
  throw std::invalid_argument(std::string("move must be L or R, got '") + c + "'");
}

StateId StateId::parse(std::string_view text) {
  if (text == "h") return halt();
  if (text.size() >= 2 && text[0] == 'q') {
    std::uint32_t i = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return q(i);
  }
  throw std::invalid_argument("state must be 'h' or 'q<n>', got '" + std::string(text) + "'");
}

std::uint32_t StateId::index() const {
  if (is_halt()) throw std::logic_error("the halt state has no index");
  return static_cast<std::uint32_t>(raw_);
}

std::string StateId::name() const { return is_halt() ? "h" : "q" + std::to_string(raw_); }

Configuration Configuration::initial(std::string_view x) {
  return Configuration{StateId::q(0), "", kBlank, std::string(x)};
}

std::string Configuration::tape() const { return left + head + right; }

std::string Configuration::associated_string() const {
  auto t = tape();
  auto first = t.find_first_not_of(kBlank);
  if (first == std::string::npos) return "";
  auto last = t.find_last_not_of(kBlank);
  return t.substr(first, last - first + 1);
}

std::string Configuration::render() const {
  std::string out = state.name();
  out += '|';
  out += left;
  out += "|[";
  out += head;
  out += "]|";
  out += right;
  return out;
}

bool is_leading_blank_halt(const Configuration& c) {
  return c.state.is_halt() && c.head == kBlank && c.left.empty();
}

bool is_trailing_blank_halt(const Configuration& c) {
  return c.state.is_halt() && c.head == kBlank && c.right.empty();
}

std::optional<std::string> halted_input_string(const Configuration& c) {
  std::string out;
  for (Symbol s : c.left) {
    if (s == kBlank) continue;
    if (!is_input_symbol(s)) return std::nullopt;
    out += s;
  }
  return out;
}

}  // namespace evoverse::uc
