#include "evoverse/sim/static_uc.hpp"

namespace evoverse::sim {

uc::Answer static_success(const uc::Configuration& c) {
  return uc::is_leading_blank_halt(c) || uc::is_trailing_blank_halt(c) ? uc::Answer::Yes
                                                                      : uc::Answer::No;
}

uc::Answer StaticUC::success(const uc::Configuration& c) {
  meter_.charge(uc::Box::Success, c.length(), c.length() + 1);
  return static_success(c);
}

std::unique_ptr<uc::UniverseComputer> StaticUC::branch() const {
  return std::make_unique<StaticUC>(*this);
}

}  // namespace evoverse::sim
