#pragma once

#include <string>
#include <vector>

namespace evoverse::analysis {

// All bit strings of length n in lexicographic order.
std::vector<std::string> bit_strings(std::size_t n);

// All bit strings of length <= n, shortest first, lexicographic within a length.
std::vector<std::string> bit_strings_up_to(std::size_t n);

}  // namespace evoverse::analysis
