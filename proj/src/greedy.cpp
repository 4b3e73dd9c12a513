#include "resetkit/greedy.hpp"

namespace resetkit {

std::optional<Word> greedy_reset_word(const Dfa& a) {
  return greedy_reset_word(a, PairMergeTable(a));
}

std::optional<Word> greedy_reset_word(const Dfa& a,
                                      const PairMergeTable& pairs) {
  if (!pairs.all_mergeable()) return std::nullopt;
  Word word;
  auto current = StateSet::full(a.state_count()).members();
  while (current.size() > 1) {
    State best_p = 0;
    State best_q = 0;
    auto best = PairMergeTable::kUnmergeable;
    // `current` is sorted, so the first strict improvement is the
    // lexicographically smallest pair at that distance.
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        auto d = pairs.distance(current[i], current[j]);
        if (d < best) {
          best = d;
          best_p = current[i];
          best_q = current[j];
        }
      }
    }
    auto merge = pairs.merging_word(best_p, best_q);
    word.insert(word.end(), merge.begin(), merge.end());
    StateSet next(a.state_count());
    for (auto q : current) {
      for (auto c : merge) q = a.next(q, c);
      next.insert(q);
    }
    current = next.members();
  }
  return word;
}

}  // namespace resetkit
