#pragma once

// Interning table for fixed-width state subsets: each distinct subset gets a
// dense id, its bits live in one flat arena.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "resetkit/dfa.hpp"
#include "resetkit/error.hpp"

namespace resetkit::detail {

class SubsetStore {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffU;

  SubsetStore(std::size_t states, std::size_t budget)
      : width_((states + 63) / 64), budget_(budget), slots_(1024, kNone) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return count_; }

  std::span<const std::uint64_t> bits(std::uint32_t id) const noexcept {
    return {arena_.data() + static_cast<std::size_t>(id) * width_, width_};
  }

  /// Returns {id, inserted}.
  std::pair<std::uint32_t, bool> intern(std::span<const std::uint64_t> set) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    auto slot = find_slot(set);
    if (slots_[slot] != kNone) return {slots_[slot], false};
    if (count_ >= budget_) {
      throw BudgetExceeded("state budget exceeded: more than " +
                           std::to_string(budget_) + " subsets");
    }
    auto id = static_cast<std::uint32_t>(count_++);
    arena_.insert(arena_.end(), set.begin(), set.end());
    slots_[slot] = id;
    return {id, true};
  }

 private:
  static std::uint64_t hash(std::span<const std::uint64_t> set) noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto b : set) {
      h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return h ^ (h >> 29);
  }

  bool equal(std::uint32_t id, std::span<const std::uint64_t> set) const {
    auto stored = bits(id);
    for (std::size_t i = 0; i < width_; ++i) {
      if (stored[i] != set[i]) return false;
    }
    return true;
  }

  std::size_t find_slot(std::span<const std::uint64_t> set) const {
    auto mask = slots_.size() - 1;
    auto slot = static_cast<std::size_t>(hash(set)) & mask;
    while (slots_[slot] != kNone && !equal(slots_[slot], set)) {
      slot = (slot + 1) & mask;
    }
    return slot;
  }

  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, kNone);
    old.swap(slots_);
    for (std::uint32_t id = 0; id < count_; ++id) {
      slots_[find_slot(bits(id))] = id;
    }
  }

  std::size_t width_;
  std::size_t budget_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint32_t> slots_;
};

/// Image of a subset under one letter, written into `out` (width words).
inline void letter_image(const Dfa& a, std::span<const std::uint64_t> set,
                         Letter c, std::vector<std::uint64_t>& out) {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto b = set[i];
    while (b != 0) {
      auto q = static_cast<State>(i * 64 + static_cast<std::size_t>(std::countr_zero(b)));
      auto r = a.next(q, c);
      out[r / 64] |= std::uint64_t{1} << (r % 64);
      b &= b - 1;
    }
  }
}

inline bool is_singleton(std::span<const std::uint64_t> set) noexcept {
  std::size_t total = 0;
  for (auto b : set) total += static_cast<std::size_t>(std::popcount(b));
  return total == 1;
}

}  // namespace resetkit::detail
