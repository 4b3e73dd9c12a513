#include "resetkit/state_set.hpp"

#include <string>

#include "resetkit/error.hpp"

namespace resetkit {

StateSet StateSet::full(std::size_t capacity) {
  StateSet s(capacity);
  for (std::size_t q = 0; q < capacity; ++q) s.insert(static_cast<State>(q));
  return s;
}

StateSet StateSet::singleton(std::size_t capacity, State q) {
  StateSet s(capacity);
  s.insert(q);
  return s;
}

void StateSet::insert(State q) {
  if (q >= capacity_) {
    throw InputError("state " + std::to_string(q) + " outside set capacity " +
                     std::to_string(capacity_));
  }
  blocks_[q / 64] |= std::uint64_t{1} << (q % 64);
}

bool StateSet::contains(State q) const {
  if (q >= capacity_) return false;
  return (blocks_[q / 64] >> (q % 64)) & 1U;
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  out.reserve(size());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

}  // namespace resetkit
