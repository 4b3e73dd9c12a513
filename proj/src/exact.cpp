#include "resetkit/exact.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "subset_store.hpp"

namespace resetkit {

namespace {

using detail::SubsetStore;

std::vector<std::uint64_t> full_bits(std::size_t n) {
  std::vector<std::uint64_t> bits((n + 63) / 64, 0);
  for (std::size_t q = 0; q < n; ++q) bits[q / 64] |= std::uint64_t{1} << (q % 64);
  return bits;
}

// Subsets reachable from Q with memoized letter transitions.
class SubsetGraph {
 public:
  SubsetGraph(const Dfa& a, std::size_t budget)
      : a_(a), store_(a.state_count(), budget), scratch_(store_.width()) {
    root_ = store_.intern(full_bits(a.state_count())).first;
  }

  std::uint32_t root() const noexcept { return root_; }

  std::uint32_t successor(std::uint32_t id, Letter c) {
    const auto m = a_.letter_count();
    auto slot = static_cast<std::size_t>(id) * m + c;
    if (slot >= cache_.size()) cache_.resize((store_.size() + 1) * m, SubsetStore::kNone);
    if (cache_[slot] == SubsetStore::kNone) {
      detail::letter_image(a_, store_.bits(id), c, scratch_);
      cache_[slot] = store_.intern(scratch_).first;
    }
    return cache_[slot];
  }

  bool singleton(std::uint32_t id) const {
    return detail::is_singleton(store_.bits(id));
  }

 private:
  const Dfa& a_;
  SubsetStore store_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint32_t> cache_;
  std::uint32_t root_ = 0;
};

}  // namespace

SearchOutcome shortest_reset_search(const Dfa& a, std::size_t budget) {
  const auto n = a.state_count();
  const auto m = a.letter_count();
  if (n == 1) return SearchOutcome{Word{}};

  SubsetStore store(n, budget);
  std::vector<std::uint32_t> parent;
  std::vector<Letter> via;
  store.intern(full_bits(n));
  parent.push_back(SubsetStore::kNone);
  via.push_back(0);

  std::vector<std::uint64_t> scratch(store.width());
  // Store ids are assigned in discovery order, so the arena is the BFS queue.
  for (std::uint32_t head = 0; head < store.size(); ++head) {
    for (std::size_t c = 0; c < m; ++c) {
      detail::letter_image(a, store.bits(head), static_cast<Letter>(c), scratch);
      auto [id, inserted] = store.intern(scratch);
      if (!inserted) continue;
      parent.push_back(head);
      via.push_back(static_cast<Letter>(c));
      if (detail::is_singleton(scratch)) {
        Word w;
        for (auto node = id; parent[node] != SubsetStore::kNone; node = parent[node]) {
          w.push_back(via[node]);
        }
        std::reverse(w.begin(), w.end());
        return SearchOutcome{std::move(w)};
      }
    }
  }
  return SearchOutcome{std::nullopt};
}

std::optional<std::size_t> shortest_reset_length(const Dfa& a,
                                                 std::size_t budget) {
  auto outcome = shortest_reset_search(a, budget);
  if (!outcome.synchronizing()) return std::nullopt;
  return outcome.length();
}

std::optional<Word> shortest_reset_word(const Dfa& a, std::size_t budget) {
  return shortest_reset_search(a, budget).word;
}

BigCount count_reset_words(const Dfa& a, std::size_t length,
                           std::size_t budget) {
  const auto m = a.letter_count();
  SubsetGraph graph(a, budget);
  // Ordered maps keep the accumulation order deterministic.
  std::map<std::uint32_t, BigCount> level{{graph.root(), BigCount{1}}};
  for (std::size_t t = 0; t < length; ++t) {
    std::map<std::uint32_t, BigCount> next;
    for (const auto& [id, count] : level) {
      for (std::size_t c = 0; c < m; ++c) {
        next[graph.successor(id, static_cast<Letter>(c))] += count;
      }
    }
    level.swap(next);
  }
  BigCount total = 0;
  for (const auto& [id, count] : level) {
    if (graph.singleton(id)) total += count;
  }
  return total;
}

std::vector<Word> enumerate_reset_words(const Dfa& a, std::size_t length,
                                        std::size_t limit, std::size_t budget) {
  const auto m = a.letter_count();
  SubsetGraph graph(a, budget);

  // levels[t] = subsets reachable in exactly t letters.
  std::vector<std::vector<std::uint32_t>> levels{{graph.root()}};
  for (std::size_t t = 0; t < length; ++t) {
    std::vector<std::uint32_t> next;
    for (auto id : levels.back()) {
      for (std::size_t c = 0; c < m; ++c) {
        next.push_back(graph.successor(id, static_cast<Letter>(c)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.push_back(std::move(next));
  }

  // good[t] = subsets at level t that complete to a singleton at `length`.
  std::vector<std::vector<std::uint32_t>> good(length + 1);
  for (auto id : levels[length]) {
    if (graph.singleton(id)) good[length].push_back(id);
  }
  for (std::size_t t = length; t-- > 0;) {
    for (auto id : levels[t]) {
      for (std::size_t c = 0; c < m; ++c) {
        auto succ = graph.successor(id, static_cast<Letter>(c));
        if (std::binary_search(good[t + 1].begin(), good[t + 1].end(), succ)) {
          good[t].push_back(id);
          break;
        }
      }
    }
  }

  std::vector<Word> words;
  Word prefix;
  auto dfs = [&](auto&& self, std::uint32_t id) -> void {
    if (words.size() >= limit) return;
    const auto t = prefix.size();
    if (t == length) {
      words.push_back(prefix);
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      auto succ = graph.successor(id, static_cast<Letter>(c));
      if (!std::binary_search(good[t + 1].begin(), good[t + 1].end(), succ)) continue;
      prefix.push_back(static_cast<Letter>(c));
      self(self, succ);
      prefix.pop_back();
    }
  };
  if (std::binary_search(good[0].begin(), good[0].end(), graph.root())) {
    dfs(dfs, graph.root());
  }
  return words;
}

}  // namespace resetkit
