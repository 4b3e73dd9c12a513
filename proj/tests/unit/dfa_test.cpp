#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "testkit.hpp"

using namespace resetkit;

namespace {

// Letter 0 sends both states to 0.
Dfa constant_pair() { return Dfa(2, 1, {0, 0}); }
Dfa one_state() { return Dfa(1, 2, {0, 0}); }
Dfa swap_pair() { return Dfa(2, 1, {1, 0}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(DfaTest, ConstructorValidates) {
  EXPECT_THROW(Dfa(0, 1, {}), InputError);
  EXPECT_THROW(Dfa(1, 0, {}), InputError);
  EXPECT_THROW(Dfa(2, 1, {0}), InputError);
  EXPECT_THROW(Dfa(2, 1, {0, 2}), InputError);
}

TEST(DfaTest, Step) {
  EXPECT_EQ(step(constant_pair(), 1, 0), 0u);
  EXPECT_EQ(step(one_state(), 0, 1), 0u);
  EXPECT_EQ(step(cerny_automaton(3), 2, 1), 0u);
  EXPECT_THROW(step(constant_pair(), 2, 0), InputError);
  EXPECT_THROW(step(constant_pair(), 0, 1), InputError);
}

TEST(DfaTest, Run) {
  auto c3 = cerny_automaton(3);
  for (State q = 0; q < 3; ++q) EXPECT_EQ(run(c3, q, Word{}), q);
  EXPECT_EQ(run(constant_pair(), 1, Word{0, 0}), 0u);
  EXPECT_EQ(run(c3, 0, Word{0, 0, 0}), 0u);
  EXPECT_THROW(run(c3, 0, Word{0, 2}), InputError);
}

TEST(DfaTest, Image) {
  auto c3 = cerny_automaton(3);
  EXPECT_EQ(image(c3, StateSet::singleton(3, 1), Word{0, 1}), StateSet::singleton(3, run(c3, 1, Word{0, 1})));
  EXPECT_EQ(image(constant_pair(), StateSet::full(2), Word{0}), StateSet::singleton(2, 0));
  auto expected = StateSet::singleton(3, 0);
  expected.insert(1);
  EXPECT_EQ(image(c3, StateSet::full(3), Word{1}), expected);
  EXPECT_THROW(image(c3, StateSet(3), Word{0}), InputError);
  EXPECT_THROW(image(c3, StateSet::full(4), Word{0}), InputError);
}

TEST(DfaTest, IsResetWord) {
  EXPECT_TRUE(is_reset_word(one_state(), Word{}));
  EXPECT_FALSE(is_reset_word(swap_pair(), Word{0, 0, 0}));
  auto c3 = cerny_automaton(3);
  EXPECT_TRUE(is_reset_word(c3, shortest_reset_word(c3).value()));
  EXPECT_TRUE(is_reset_word(c3, Word{1, 0, 0, 1}));
  EXPECT_FALSE(is_reset_word(c3, Word{1, 0, 0}));
}

TEST(DfaTest, IsSynchronizing) {
  EXPECT_TRUE(is_synchronizing(one_state()));
  EXPECT_FALSE(is_synchronizing(swap_pair()));
  EXPECT_TRUE(is_synchronizing(cerny_automaton(3)));
}

TEST(DfaTest, CernyFamily) {
  auto c2 = cerny_automaton(2);
  EXPECT_EQ(step(c2, 0, 0), 1u);
  EXPECT_EQ(step(c2, 1, 0), 0u);
  EXPECT_EQ(step(c2, 0, 1), 0u);
  EXPECT_EQ(step(c2, 1, 1), 0u);
  EXPECT_EQ(shortest_reset_length(cerny_automaton(3)), 4u);
  EXPECT_EQ(shortest_reset_length(cerny_automaton(4)), 9u);
  EXPECT_THROW(cerny_automaton(1), InputError);
  for (std::size_t n = 2; n <= 7; ++n) {
    auto c = cerny_automaton(n);
    for (State q = 0; q < n; ++q) {
      EXPECT_EQ(step(c, q, 0), (q + 1) % n);
      EXPECT_EQ(step(c, q, 1), q == n - 1 ? 0 : q);
    }
  }
}

TEST(DfaFormatTest, RoundTripsCernyFile) {
  auto text = read_file(RESETKIT_TEST_DATA "/cerny3.dfa");
  auto a = parse_dfa(text);
  EXPECT_EQ(a, cerny_automaton(3));
  EXPECT_EQ(serialize_dfa(a), text);
}

TEST(DfaFormatTest, AcceptsAnyOrderCommentsAndLabels) {
  auto a = parse_dfa(
      "# two states\n"
      "dfa 2 1\n"
      "1 0 0\n"
      "\n"
      "# reset\n"
      "0 0 0\n"
      "statename 0 home\n"
      "lettername 0 go\n");
  EXPECT_TRUE(std::ranges::equal(a.table(), constant_pair().table()));
  EXPECT_EQ(a.state_label(0), "home");
  EXPECT_EQ(a.letter_label(0), "go");
  auto again = parse_dfa(serialize_dfa(a));
  EXPECT_EQ(again.state_label(0), "home");
  EXPECT_EQ(serialize_dfa(again), serialize_dfa(a));
}

TEST(DfaFormatTest, MetadataSurvivesRoundTrip) {
  auto doc = parse_dfa_document("dfa 1 1\n0 0 0\nmeta K 4\nmeta decode 2,3\n");
  ASSERT_EQ(doc.metadata.size(), 2u);
  EXPECT_EQ(doc.metadata[1].second, "2,3");
  EXPECT_EQ(serialize_dfa(doc.automaton, doc.metadata), "dfa 1 1\n0 0 0\nmeta K 4\nmeta decode 2,3\n");
}

namespace {

ParseErrorKind kind_of(const std::string& text) {
  try {
    parse_dfa(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseErrorKind::MalformedLine;
}

}  // namespace

TEST(DfaFormatTest, DistinctErrors) {
  EXPECT_EQ(kind_of("dfa 2\n"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of("nfa 1 1\n0 0 0\n"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of("dfa 0 1\n"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(kind_of("dfa 2 1\n0 0 1\n"), ParseErrorKind::IncompleteTable);
  EXPECT_EQ(kind_of("dfa 2 1\n0 0 1\n0 0 0\n1 0 0\n"), ParseErrorKind::DuplicateTransition);
  EXPECT_EQ(kind_of("dfa 2 1\n0 0 2\n1 0 0\n"), ParseErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of("dfa 2 1\n0 0 x\n1 0 0\n"), ParseErrorKind::MalformedLine);
}

TEST(DfaFormatTest, ErrorsCarryLineNumbers) {
  try {
    parse_dfa("dfa 2 1\n# c\n0 0 5\n1 0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_dfa("dfa 2 1\n0 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("incomplete transition table"), std::string::npos);
  }
}

TEST(WordFormatTest, CommaSeparated) {
  EXPECT_EQ(parse_word("0,1,1,0"), (Word{0, 1, 1, 0}));
  EXPECT_EQ(parse_word(""), Word{});
  EXPECT_EQ(format_word(Word{2, 0}), "2,0");
  EXPECT_EQ(format_word(Word{}), "");
  EXPECT_THROW(parse_word("0,,1"), InputError);
}

// Properties over random automata.

TEST(DfaPropertyTest, RunIsAMonoidAction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = testkit::random_dfa(rng, 1 + rng() % 9, 1 + rng() % 3);
    Word u(rng() % 6), v(rng() % 6);
    for (auto& c : u) c = rng() % a.letter_count();
    for (auto& c : v) c = rng() % a.letter_count();
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    State q = rng() % a.state_count();
    EXPECT_EQ(run(a, q, uv), run(a, run(a, q, u), v));
  }
}

TEST(DfaPropertyTest, ImagesNeverGrow) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = testkit::random_dfa(rng, 1 + rng() % 12, 1 + rng() % 3);
    StateSet s(a.state_count());
    s.insert(rng() % a.state_count());
    for (State q = 0; q < a.state_count(); ++q) {
      if (rng() % 2) s.insert(q);
    }
    Word w(rng() % 5);
    for (auto& c : w) c = rng() % a.letter_count();
    EXPECT_LE(image(a, s, w).size(), s.size());
  }
}

TEST(DfaPropertyTest, ResetWordsExtendOnBothSides) {
  for (const auto& a : testkit::corpus(13, 150)) {
    auto w = shortest_reset_word(a).value();
    std::mt19937_64 rng(a.state_count() * 31 + a.letter_count());
    for (int i = 0; i < 5; ++i) {
      Word xwy(rng() % 4);
      for (auto& c : xwy) c = rng() % a.letter_count();
      xwy.insert(xwy.end(), w.begin(), w.end());
      for (std::size_t j = rng() % 4; j > 0; --j) xwy.push_back(rng() % a.letter_count());
      EXPECT_TRUE(is_reset_word(a, xwy));
    }
  }
}

TEST(DfaPropertyTest, SynchronizingIffShortestDefined) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 400; ++trial) {
    auto a = testkit::random_dfa(rng, 1 + rng() % 10, 1 + rng() % 3);
    EXPECT_EQ(is_synchronizing(a), shortest_reset_length(a).has_value());
    EXPECT_EQ(is_synchronizing(a), testkit::naive_shortest(a).has_value());
  }
}

TEST(DfaPropertyTest, PermutationAutomataNeverSynchronize) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 8;
    std::size_t m = 1 + rng() % 3;
    std::vector<State> table(n * m);
    for (Letter c = 0; c < m; ++c) {
      std::vector<State> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (State q = 0; q < n; ++q) table[q * m + c] = perm[q];
    }
    EXPECT_FALSE(is_synchronizing(Dfa(n, m, table)));
  }
}

TEST(PairMergeTest, DistancesMatchBruteForce) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testkit::random_dfa(rng, 2 + rng() % 6, 1 + rng() % 3);
    PairMergeTable pairs(a);
    for (State p = 0; p < a.state_count(); ++p) {
      for (State q = p + 1; q < a.state_count(); ++q) {
        // Pair BFS by brute force over words up to length n^2.
        std::optional<std::size_t> best;
        for (std::size_t len = 0; !best && len <= 5; ++len) {
          testkit::for_each_word(a.letter_count(), len, [&](const Word& w) {
            if (!best && run(a, p, w) == run(a, q, w)) best = len;
          });
        }
        if (best) {
          EXPECT_EQ(pairs.distance(p, q), *best);
          auto w = pairs.merging_word(p, q);
          EXPECT_EQ(w.size(), *best);
          EXPECT_EQ(run(a, p, w), run(a, q, w));
        } else {
          EXPECT_GT(pairs.distance(p, q), 5u);
        }
      }
    }
  }
}
