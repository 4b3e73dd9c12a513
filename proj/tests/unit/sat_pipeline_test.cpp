#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "testkit.hpp"

using namespace resetkit;

namespace {

Dfa one_state() { return Dfa(1, 2, {0, 0}); }
Dfa swap_pair() { return Dfa(2, 1, {1, 0}); }

std::size_t query_budget(std::size_t n) {
  return static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(cubic_length_bound(n)) + 1))) + 1;
}

}  // namespace

TEST(SatPipelineTest, CubicBound) {
  EXPECT_EQ(cubic_length_bound(1), 0u);
  EXPECT_EQ(cubic_length_bound(3), 4u);
  EXPECT_EQ(cubic_length_bound(8), 84u);
}

TEST(SatPipelineTest, HasResetWordOfLength) {
  auto c3 = cerny_automaton(3);
  auto o = Oracle::internal();
  EXPECT_TRUE(has_reset_word_of_length(c3, 4, o));
  EXPECT_FALSE(has_reset_word_of_length(c3, 3, o));
  EXPECT_TRUE(has_reset_word_of_length(c3, 1'000'000'000ULL, o));
  EXPECT_TRUE(has_reset_word_of_length(c3, UINT64_MAX, o));
  EXPECT_FALSE(has_reset_word_of_length(swap_pair(), 1'000'000'000ULL, o));
  EXPECT_TRUE(has_reset_word_of_length(one_state(), 0, o));
}

TEST(SatPipelineTest, IsShortestLength) {
  auto c3 = cerny_automaton(3);
  auto o = Oracle::internal();
  EXPECT_TRUE(is_shortest_length(c3, 4, o));
  EXPECT_FALSE(is_shortest_length(c3, 5, o));
  EXPECT_FALSE(is_shortest_length(c3, 3, o));
  EXPECT_FALSE(is_shortest_length(c3, 0, o));
  EXPECT_TRUE(is_shortest_length(one_state(), 0, o));
  EXPECT_FALSE(is_shortest_length(one_state(), 1, o));
  EXPECT_FALSE(is_shortest_length(swap_pair(), 1, o));
}

TEST(SatPipelineTest, AlgorithmOneExamples) {
  auto o = Oracle::internal();
  auto r = shortest_length_via_oracle(cerny_automaton(3), o);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->length, 4u);
  EXPECT_EQ(r->queries, 2u);
  EXPECT_EQ(o.query_count(), 2u);
  auto single = shortest_length_via_oracle(one_state(), o);
  ASSERT_TRUE(single);
  EXPECT_EQ(single->length, 0u);
  EXPECT_FALSE(shortest_length_via_oracle(swap_pair(), o));
}

TEST(SatPipelineTest, AlgorithmTwoExamples) {
  auto o = Oracle::internal();
  EXPECT_EQ(shortest_word_via_oracle(one_state(), o), Word{});
  auto w = shortest_word_via_oracle(cerny_automaton(3), o).value();
  EXPECT_EQ(w.size(), 4u);
  EXPECT_TRUE(is_reset_word(cerny_automaton(3), w));
  EXPECT_EQ(shortest_word_via_oracle(Dfa(2, 2, {1, 0, 1, 0}), o), Word{0});
  EXPECT_FALSE(shortest_word_via_oracle(swap_pair(), o));
}

TEST(SatPipelineTest, AlgorithmsMatchBfsOnCorpus) {
  for (const auto& a : testkit::corpus(81, 300)) {
    auto o = Oracle::internal();
    auto r = shortest_length_via_oracle(a, o).value();
    auto l = testkit::naive_shortest(a).value();
    EXPECT_EQ(r.length, l);
    EXPECT_LE(r.queries, query_budget(a.state_count()));
    auto w = shortest_word_via_oracle(a, o).value();
    EXPECT_EQ(w.size(), l);
    EXPECT_TRUE(testkit::naive_resets(a, w));
  }
}

TEST(SatPipelineTest, Monotone) {
  for (const auto& a : testkit::corpus(82, 150)) {
    auto o = Oracle::internal();
    bool previous = false;
    for (std::size_t k = 0; k <= 15; ++k) {
      bool now = has_reset_word_of_length(a, k, o);
      if (previous) EXPECT_TRUE(now);
      previous = now;
    }
  }
}

TEST(SatPipelineTest, ShortestIsComposition) {
  for (const auto& a : testkit::corpus(83, 100)) {
    auto o = Oracle::internal();
    for (std::size_t k = 0; k <= 10; ++k) {
      bool composed = has_reset_word_of_length(a, k, o) && !(k > 0 && has_reset_word_of_length(a, k - 1, o));
      EXPECT_EQ(is_shortest_length(a, k, o), composed);
    }
  }
}

TEST(SatPipelineTest, NoShorterWordIsSat) {
  for (const auto& a : testkit::corpus(84, 100)) {
    auto l = shortest_reset_length(a).value();
    if (l == 0) continue;
    auto q = encode_short_reset(a, {l - 1, {}});
    EXPECT_FALSE(dpll_solve(q.cnf));
  }
}

TEST(SatPipelineTest, LargerCernyViaSat) {
  auto o = Oracle::internal();
  auto r = shortest_length_via_oracle(cerny_automaton(6), o);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->length, 25u);
}
