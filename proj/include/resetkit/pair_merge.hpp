#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "resetkit/dfa.hpp"

namespace resetkit {

/// Shortest merging words for every unordered pair of states.
///
/// Built by a backward BFS over the pair automaton seeded with the diagonal,
/// in O(n^2 * m). For each mergeable pair the table keeps the distance and the
/// first letter of one shortest merging word; following those letters
/// reconstructs the word.
class PairMergeTable {
 public:
  static constexpr std::uint32_t kUnmergeable =
      std::numeric_limits<std::uint32_t>::max();

  explicit PairMergeTable(const Dfa& a);

  /// 0 for p == q, kUnmergeable when no word merges the pair.
  std::uint32_t distance(State p, State q) const noexcept {
    if (p == q) return 0;
    return distance_[index(p, q)];
  }

  bool mergeable(State p, State q) const noexcept {
    return distance(p, q) != kUnmergeable;
  }

  bool all_mergeable() const noexcept { return all_mergeable_; }

  /// Largest finite pair distance.
  std::uint32_t max_distance() const noexcept { return max_distance_; }

  /// Throws InputError if the pair is not mergeable.
  Word merging_word(State p, State q) const;

 private:
  std::size_t index(State p, State q) const noexcept {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(q) * (q - 1) / 2 + p;
  }

  Dfa automaton_;
  std::vector<std::uint32_t> distance_;
  std::vector<Letter> first_letter_;
  bool all_mergeable_ = true;
  std::uint32_t max_distance_ = 0;
};

}  // namespace resetkit
