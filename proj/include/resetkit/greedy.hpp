#pragma once

#include <optional>

#include "resetkit/dfa.hpp"
#include "resetkit/pair_merge.hpp"

namespace resetkit {

/// Polynomial-time heuristic reset word: repeatedly merge the pair of the
/// current image with the smallest merge distance (ties: lexicographically
/// smallest pair) by appending its shortest merging word. Absent iff the
/// automaton is not synchronizing. Never shorter than the optimum.
std::optional<Word> greedy_reset_word(const Dfa& a);
std::optional<Word> greedy_reset_word(const Dfa& a, const PairMergeTable& pairs);

}  // namespace resetkit
