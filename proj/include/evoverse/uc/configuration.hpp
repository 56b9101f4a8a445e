#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace evoverse::uc {

// Tape symbols are single characters. The blank is rendered '_'.
using Symbol = char;
inline constexpr Symbol kBlank = '_';

inline bool is_input_symbol(Symbol s) { return s == '0' || s == '1'; }

enum class Move { Left, Right };

char to_char(Move m);
Move move_from_char(char c);

// A control state: either the halt state h or some q_i.
class StateId {
 public:
  static constexpr StateId halt() { return StateId(-1); }
  static constexpr StateId q(std::uint32_t i) { return StateId(static_cast<std::int64_t>(i)); }

  // Accepts "h" or "q<digits>".
  static StateId parse(std::string_view text);

  constexpr bool is_halt() const { return raw_ < 0; }
  std::uint32_t index() const;
  std::string name() const;

  auto operator<=>(const StateId&) const = default;

 private:
  constexpr explicit StateId(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_;
};

// (state, left head right). The head cell always exists; moving off either
// end of the tape reveals a fresh blank.
struct Configuration {
  StateId state = StateId::q(0);
  std::string left;
  Symbol head = kBlank;
  std::string right;

  // C_{0,x} = (q0, [_]x)
  static Configuration initial(std::string_view x);

  std::size_t length() const { return left.size() + 1 + right.size(); }

  // left + head + right, unmodified.
  std::string tape() const;

  // Tape with leading and trailing blanks stripped (y_C).
  std::string associated_string() const;

  // "state|left|[head]|right"
  std::string render() const;

  bool operator==(const Configuration&) const = default;
};

// (h, [_]x): halted on the blank at the left end.
bool is_leading_blank_halt(const Configuration& c);
// (h, x[_]): halted on the blank at the right end.
bool is_trailing_blank_halt(const Configuration& c);

// The input-alphabet string a trailing-blank halt hands to an oracle: all
// blanks removed. Empty optional if other work symbols remain on the tape.
std::optional<std::string> halted_input_string(const Configuration& c);

}  // namespace evoverse::uc
