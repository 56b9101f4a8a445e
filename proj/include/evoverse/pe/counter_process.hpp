#pragma once

#include <cstdint>
#include <map>
#include <optional>

namespace evoverse::pe {

// The non-predetermined counter g. An unseen n is assigned |W|+1 on first
// evaluation; afterwards g(n) is fixed forever.
class CounterProcess {
 public:
  using Value = std::uint64_t;

  Value evaluate(Value n);

  // Value already assigned to n, without extending W.
  std::optional<Value> lookup(Value n) const;

  std::size_t size() const { return assigned_.size(); }
  const std::map<Value, Value>& assignments() const { return assigned_; }

 private:
  std::map<Value, Value> assigned_;
};

}  // namespace evoverse::pe
