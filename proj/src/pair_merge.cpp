#include "resetkit/pair_merge.hpp"

#include <deque>
#include <utility>

#include "resetkit/error.hpp"

namespace resetkit {

PairMergeTable::PairMergeTable(const Dfa& a) : automaton_(a) {
  const auto n = a.state_count();
  const auto m = a.letter_count();
  const std::size_t pairs = n * (n - 1) / 2;
  distance_.assign(pairs, kUnmergeable);
  first_letter_.assign(pairs, 0);

  // preimage[c][offset[c][x] .. offset[c][x+1]) lists p with delta(p,c) = x.
  std::vector<std::vector<std::size_t>> offset(m, std::vector<std::size_t>(n + 1, 0));
  std::vector<std::vector<State>> preimage(m, std::vector<State>(n));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t p = 0; p < n; ++p) {
      ++offset[c][a.next(static_cast<State>(p), static_cast<Letter>(c)) + 1];
    }
    for (std::size_t x = 0; x < n; ++x) offset[c][x + 1] += offset[c][x];
    auto fill = offset[c];
    for (std::size_t p = 0; p < n; ++p) {
      auto x = a.next(static_cast<State>(p), static_cast<Letter>(c));
      preimage[c][fill[x]++] = static_cast<State>(p);
    }
  }

  // BFS queue over unordered pairs {x, y}, x <= y; the diagonal has distance 0.
  std::deque<std::pair<State, State>> queue;
  for (std::size_t x = 0; x < n; ++x) {
    queue.emplace_back(static_cast<State>(x), static_cast<State>(x));
  }
  std::size_t reached = 0;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    const std::uint32_t d = distance(x, y);
    for (std::size_t c = 0; c < m; ++c) {
      const auto* px_begin = preimage[c].data() + offset[c][x];
      const auto* px_end = preimage[c].data() + offset[c][x + 1];
      const auto* py_begin = preimage[c].data() + offset[c][y];
      const auto* py_end = preimage[c].data() + offset[c][y + 1];
      for (auto* p = px_begin; p != px_end; ++p) {
        for (auto* q = py_begin; q != py_end; ++q) {
          if (*p == *q) continue;
          auto idx = index(*p, *q);
          if (distance_[idx] != kUnmergeable) continue;
          distance_[idx] = d + 1;
          first_letter_[idx] = static_cast<Letter>(c);
          max_distance_ = d + 1;
          ++reached;
          queue.emplace_back(std::min(*p, *q), std::max(*p, *q));
        }
      }
    }
  }
  all_mergeable_ = reached == pairs;
}

Word PairMergeTable::merging_word(State p, State q) const {
  if (p >= automaton_.state_count() || q >= automaton_.state_count()) {
    throw InputError("state index out of range");
  }
  if (!mergeable(p, q)) throw InputError("pair is not mergeable");
  Word w;
  while (p != q) {
    auto c = first_letter_[index(p, q)];
    w.push_back(c);
    p = automaton_.next(p, c);
    q = automaton_.next(q, c);
  }
  return w;
}

}  // namespace resetkit
