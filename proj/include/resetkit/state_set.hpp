#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "resetkit/types.hpp"

namespace resetkit {

/// Dense bitset over the states 0..capacity-1 of one automaton.
class StateSet {
 public:
  explicit StateSet(std::size_t capacity)
      : capacity_(capacity), blocks_((capacity + 63) / 64, 0) {}

  static StateSet full(std::size_t capacity);
  static StateSet singleton(std::size_t capacity, State q);

  std::size_t capacity() const noexcept { return capacity_; }

  void insert(State q);
  bool contains(State q) const;

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
    return total;
  }
  bool empty() const noexcept { return size() == 0; }

  std::vector<State> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      auto b = blocks_[i];
      while (b != 0) {
        auto bit = static_cast<std::size_t>(std::countr_zero(b));
        f(static_cast<State>(i * 64 + bit));
        b &= b - 1;
      }
    }
  }

  std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::size_t capacity_;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace resetkit
