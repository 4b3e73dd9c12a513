#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "resetkit/dfa.hpp"
#include "resetkit/oracle.hpp"

namespace resetkit {

/// Pin's upper bound (n^3 - n) / 6 on the shortest reset word of any
/// synchronizing n-state automaton.
std::uint64_t cubic_length_bound(std::uint64_t n);

/// SHORT-RESET-WORD: is there a reset word of exactly k letters? k may be
/// huge; it is clamped to min(k, cubic bound) and answered without a SAT
/// call when the clamped value reaches the greedy word's length.
bool has_reset_word_of_length(const Dfa& a, std::uint64_t k, Oracle& oracle);

/// SHORTEST-RESET-WORD: has(k) and not has(k-1); for k = 0, n == 1.
bool is_shortest_length(const Dfa& a, std::uint64_t k, Oracle& oracle);

struct OracleLength {
  std::size_t length = 0;
  /// Satisfiability questions actually sent to the oracle.
  std::size_t queries = 0;
};

/// Binary search between low = -1 and high = cubic bound with the oracle
/// deciding "reset word of length k". Absent if not synchronizing.
std::optional<OracleLength> shortest_length_via_oracle(const Dfa& a,
                                                       Oracle& oracle);

/// Computes the shortest length, then grows a prefix one letter at a time,
/// keeping the first letter (ascending) that still extends to a reset word
/// of that length. Throws OracleInconsistency if no letter extends.
std::optional<Word> shortest_word_via_oracle(const Dfa& a, Oracle& oracle);

}  // namespace resetkit
