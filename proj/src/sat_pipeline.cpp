#include "resetkit/sat_pipeline.hpp"

#include <algorithm>
#include <limits>

#include "resetkit/encoding.hpp"
#include "resetkit/error.hpp"
#include "resetkit/greedy.hpp"
#include "resetkit/pair_merge.hpp"

namespace resetkit {

std::uint64_t cubic_length_bound(std::uint64_t n) {
  if (n > (std::uint64_t{1} << 20)) {
    throw InputError("automaton too large for the cubic bound");
  }
  return (n * n * n - n) / 6;
}

namespace {

// Per-automaton state shared by the oracle-backed decisions: the
// synchronizability verdict and a greedy upper bound on the shortest length.
class LengthDecider {
 public:
  LengthDecider(const Dfa& a, Oracle& oracle) : a_(a), oracle_(oracle) {
    PairMergeTable pairs(a);
    synchronizing_ = pairs.all_mergeable();
    if (synchronizing_) greedy_length_ = greedy_reset_word(a, pairs)->size();
  }

  bool synchronizing() const noexcept { return synchronizing_; }

  bool has_length(std::uint64_t k, const Word& prefix = {}) {
    if (!synchronizing_) return false;
    if (prefix.empty()) {
      k = std::min<std::uint64_t>(k, cubic_length_bound(a_.state_count()));
      if (k >= greedy_length_) return true;
    }
    if (prefix.size() > k) return false;
    auto encoded = encode_short_reset(
        a_, BoundedResetQuery{static_cast<std::size_t>(k), prefix});
    return oracle_.solve(encoded.cnf).has_value();
  }

 private:
  const Dfa& a_;
  Oracle& oracle_;
  bool synchronizing_ = false;
  std::size_t greedy_length_ = 0;
};

}  // namespace

bool has_reset_word_of_length(const Dfa& a, std::uint64_t k, Oracle& oracle) {
  return LengthDecider(a, oracle).has_length(k);
}

bool is_shortest_length(const Dfa& a, std::uint64_t k, Oracle& oracle) {
  if (k == 0) return a.state_count() == 1;
  LengthDecider decider(a, oracle);
  return decider.has_length(k) && !decider.has_length(k - 1);
}

std::optional<OracleLength> shortest_length_via_oracle(const Dfa& a,
                                                       Oracle& oracle) {
  LengthDecider decider(a, oracle);
  if (!decider.synchronizing()) return std::nullopt;
  const auto before = oracle.query_count();
  std::int64_t low = -1;
  auto high = static_cast<std::int64_t>(cubic_length_bound(a.state_count()));
  while (high - low > 1) {
    // ceil((low + high) / 2) for low >= -1
    std::int64_t k = low + (high - low + 1) / 2;
    if (decider.has_length(static_cast<std::uint64_t>(k))) {
      high = k;
    } else {
      low = k;
    }
  }
  return OracleLength{static_cast<std::size_t>(high),
                      oracle.query_count() - before};
}

std::optional<Word> shortest_word_via_oracle(const Dfa& a, Oracle& oracle) {
  auto length = shortest_length_via_oracle(a, oracle);
  if (!length) return std::nullopt;
  LengthDecider decider(a, oracle);
  Word w;
  while (w.size() < length->length) {
    bool extended = false;
    for (std::size_t c = 0; c < a.letter_count(); ++c) {
      w.push_back(static_cast<Letter>(c));
      if (decider.has_length(length->length, w)) {
        extended = true;
        break;
      }
      w.pop_back();
    }
    if (!extended) {
      throw OracleInconsistency("no letter extends prefix of length " +
                                std::to_string(w.size()));
    }
  }
  return w;
}

}  // namespace resetkit
