#pragma once

#include <string>
#include <string_view>

#include "evoverse/uc/procedure.hpp"

// Stock procedures used by the experiments, the CLI and the game server.
namespace evoverse::sim::procedures {

// {[(q0,_)->(h,_,R)], [(h,0)->(h,0,R)], [(h,1)->(h,1,R)]}: walk to the end of
// the input and halt on the trailing blank. On the evolutionary backend its
// language is whatever the embedded automaton decides.
uc::Procedure scan();

// Steps left off the tape start and halts on (h, [_]x): accepted everywhere.
uc::Procedure accept_all();

// No instructions: stuck at C_0, rejected everywhere.
uc::Procedure reject_all();

// Budget that lets scan() finish on an input of the given length.
std::size_t scan_budget(std::size_t input_length);

// Pairing of (x, y) into one input string: 1^|x| 0 x y.
std::string encode_pair(std::string_view x, std::string_view y);

// Accepts encode_pair(x, y) iff x == y. Halts on the leading blank, so the
// success box never consults an oracle.
uc::Procedure pair_equality();

// On encode_pair(x, y) with |y| == |x|: erases everything except y and
// halts on the trailing blank, so the success box decides y exactly as scan()
// would. Any other shape is rejected. This is the verifier for
// L' = {x : some y with |y| = |x| is accepted by scan()}.
uc::Procedure same_length_member();

// Step budget sufficient for pair_equality / same_length_member on an
// encoded input of the given length.
std::size_t pair_budget(std::size_t encoded_length);

}  // namespace evoverse::sim::procedures
