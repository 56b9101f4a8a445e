#include "evoverse/sim/procedures.hpp"

#include <sstream>
#include <vector>

namespace evoverse::sim::procedures {

namespace {

// Each row: "from read to write move".
uc::Procedure build(const std::vector<const char*>& rows, std::string_view extra = "") {
  std::vector<uc::Instruction> out;
  for (const char* row : rows) {
    std::istringstream in(row);
    std::string from, read, to, write, move;
    in >> from >> read >> to >> write >> move;
    out.push_back({uc::StateId::parse(from), read[0], uc::StateId::parse(to), write[0],
                   uc::move_from_char(move[0])});
  }
  return uc::Procedure::validate(out, uc::Alphabet(extra));
}

constexpr std::string_view kPairSymbols = "XabcdYZS";

// Shared front half of the pair verifiers.
//   q1-q4: for each unary 1 (crossed to X) mark one x symbol as a/b.
//   q5:    restore the unary crosses.
//   q6-q9: for each unary 1 mark one y symbol as c/d.
//   q10:   after the last round, no unmarked y symbol may remain.
// Leaves the head on the last y cell in q11 when |x| = |y| = prefix length.
const std::initializer_list<const char*> kMatchLengths = {
    "q0 _ q1 _ R",
    "q1 X q1 X R", "q1 1 q2 X R", "q1 0 q5 0 L",
    "q2 1 q2 1 R", "q2 0 q3 0 R",
    "q3 a q3 a R", "q3 b q3 b R", "q3 0 q4 a L", "q3 1 q4 b L",
    "q4 a q4 a L", "q4 b q4 b L", "q4 0 q4 0 L", "q4 1 q4 1 L", "q4 X q4 X L", "q4 _ q1 _ R",
    "q5 X q5 1 L", "q5 _ q6 _ R",
    "q6 X q6 X R", "q6 1 q7 X R", "q6 0 q10 0 R",
    "q7 1 q7 1 R", "q7 0 q8 0 R",
    "q8 a q8 a R", "q8 b q8 b R", "q8 c q8 c R", "q8 d q8 d R", "q8 0 q9 c L", "q8 1 q9 d L",
    "q9 a q9 a L", "q9 b q9 b L", "q9 c q9 c L", "q9 d q9 d L", "q9 0 q9 0 L", "q9 1 q9 1 L",
    "q9 X q9 X L", "q9 _ q6 _ R",
    "q10 a q10 a R", "q10 b q10 b R", "q10 c q10 c R", "q10 d q10 d R", "q10 _ q11 _ L",
};

uc::Procedure with_match_lengths(std::initializer_list<const char*> tail) {
  std::vector<const char*> rows(kMatchLengths);
  rows.insert(rows.end(), tail);
  return build(rows, kPairSymbols);
}

}  // namespace

uc::Procedure scan() { return build({"q0 _ h _ R", "h 0 h 0 R", "h 1 h 1 R"}); }

uc::Procedure accept_all() { return build({"q0 _ h _ L"}); }

uc::Procedure reject_all() { return uc::Procedure(); }

std::size_t scan_budget(std::size_t input_length) { return input_length + 1; }

std::string encode_pair(std::string_view x, std::string_view y) {
  std::string out(x.size(), '1');
  out += '0';
  out += x;
  out += y;
  return out;
}

uc::Procedure pair_equality() {
  return with_match_lengths({
      // back to the left end
      "q11 a q11 a L", "q11 b q11 b L", "q11 c q11 c L", "q11 d q11 d L", "q11 0 q11 0 L",
      "q11 X q11 X L", "q11 _ q12 _ R",
      // skip the crossed prefix and separator
      "q12 X q12 X R", "q12 0 q13 0 R",
      // next unconsumed x symbol, or done
      "q13 Z q13 Z R", "q13 a q14 Z R", "q13 b q15 Z R",
      "q13 c q17 c L", "q13 d q17 d L", "q13 Y q17 Y L", "q13 _ q17 _ L",
      // carry 0 / carry 1 to the first unconsumed y symbol
      "q14 a q14 a R", "q14 b q14 b R", "q14 Y q14 Y R", "q14 c q16 Y L",
      "q15 a q15 a R", "q15 b q15 b R", "q15 Y q15 Y R", "q15 d q16 Y L",
      "q16 a q16 a L", "q16 b q16 b L", "q16 Y q16 Y L", "q16 Z q16 Z L", "q16 0 q16 0 L",
      "q16 X q16 X L", "q16 _ q12 _ R",
      // accept: step off the left end
      "q17 a q17 a L", "q17 b q17 b L", "q17 c q17 c L", "q17 d q17 d L", "q17 Y q17 Y L",
      "q17 Z q17 Z L", "q17 0 q17 0 L", "q17 X q17 X L", "q17 _ h _ L",
  });
}

uc::Procedure same_length_member() {
  return with_match_lengths({
      // left to the separator, which becomes the marker S
      "q11 a q11 a L", "q11 b q11 b L", "q11 c q11 c L", "q11 d q11 d L", "q11 0 q12 S L",
      "q12 X q12 X L", "q12 _ q13 _ R",
      // erase the prefix and the marker
      "q13 X q13 _ R", "q13 S q14 _ R",
      // erase x; the first y symbol hands over to h
      "q14 a q14 _ R", "q14 b q14 _ R", "q14 c h 0 R", "q14 d h 1 R",
      // empty y: park on the trailing blank
      "q14 _ q15 _ L", "q15 _ h _ R",
      // h restores the rest of y and stops on the trailing blank
      "h c h 0 R", "h d h 1 R",
  });
}

std::size_t pair_budget(std::size_t encoded_length) {
  return 16 * (encoded_length + 2) * (encoded_length + 2);
}

}  // namespace evoverse::sim::procedures
