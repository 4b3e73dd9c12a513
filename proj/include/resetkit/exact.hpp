#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "resetkit/dfa.hpp"

namespace resetkit {

using BigCount = boost::multiprecision::cpp_int;

/// Maximum number of distinct subsets a subset search may store.
inline constexpr std::size_t kDefaultSubsetBudget = std::size_t{1} << 22;

/// Result of the exact shortest-reset-word search.
struct SearchOutcome {
  /// Absent iff the automaton is not synchronizing.
  std::optional<Word> word;

  bool synchronizing() const noexcept { return word.has_value(); }
  std::size_t length() const { return word.value().size(); }
};

/// Breadth-first search over subsets reachable from the full state set.
/// Letters are tried in ascending order and the first singleton found wins.
/// Throws BudgetExceeded once more than `budget` subsets have been stored.
SearchOutcome shortest_reset_search(const Dfa& a,
                                    std::size_t budget = kDefaultSubsetBudget);

std::optional<std::size_t> shortest_reset_length(
    const Dfa& a, std::size_t budget = kDefaultSubsetBudget);

std::optional<Word> shortest_reset_word(
    const Dfa& a, std::size_t budget = kDefaultSubsetBudget);

/// Number of reset words of exactly `length` letters, by dynamic programming
/// over reachable subsets (never by enumerating the words).
BigCount count_reset_words(const Dfa& a, std::size_t length,
                           std::size_t budget = kDefaultSubsetBudget);

/// Reset words of exactly `length` letters in lexicographic order, at most
/// `limit` of them. The search only descends into prefixes that still
/// complete to a reset word.
std::vector<Word> enumerate_reset_words(
    const Dfa& a, std::size_t length, std::size_t limit,
    std::size_t budget = kDefaultSubsetBudget);

}  // namespace resetkit
