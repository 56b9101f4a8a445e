#pragma once

#include "evoverse/uc/universe.hpp"

namespace evoverse::sim {

// The static universe-computer: Turing rewrite for TBOX, and an SBOX that
// answers YES exactly on (h, [_]x) and (h, x[_]). Nothing ever changes.
class StaticUC final : public uc::UniverseComputer {
 public:
  uc::Answer success(const uc::Configuration& c) override;
  uc::LinearBound clock_bound() const override { return {1, 1}; }
  std::unique_ptr<uc::UniverseComputer> branch() const override;
  std::string_view kind() const override { return "static"; }
};

// The success-box rule alone, without clock accounting.
uc::Answer static_success(const uc::Configuration& c);

}  // namespace evoverse::sim
