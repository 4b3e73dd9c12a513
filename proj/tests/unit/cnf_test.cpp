#include <gtest/gtest.h>

#include <random>

#include "testkit.hpp"

using namespace resetkit;

TEST(DimacsTest, ParsesCommentsAndMultiLineClauses) {
  auto f = parse_dimacs("c hello\np cnf 3 2\n1 -2\n 3 0\n-1 0\n");
  EXPECT_EQ(f.variable_count, 3);
  EXPECT_EQ(f.clauses, (std::vector<Clause>{{1, -2, 3}, {-1}}));
}

TEST(DimacsTest, RoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = testkit::random_cnf(rng, 1 + rng() % 8, rng() % 10);
    EXPECT_EQ(parse_dimacs(write_dimacs(f)), f);
  }
}

TEST(DimacsTest, Errors) {
  EXPECT_THROW(parse_dimacs("1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\nx 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 2\n1 0\n"), ParseError);
}

TEST(CnfTest, Validate) {
  EXPECT_NO_THROW((Cnf{2, {{1, -2}}}.validate()));
  EXPECT_THROW((Cnf{2, {{3}}}.validate()), InputError);
  EXPECT_THROW((Cnf{2, {{0}}}.validate()), InputError);
  EXPECT_THROW((Cnf{2, {{}}}.validate()), InputError);
  EXPECT_NO_THROW((Cnf{2, {{}}}.validate(true)));
}

TEST(CnfTest, SatisfiesAndCount) {
  Cnf f{2, {{1}, {-1, 2}, {-2}}};
  Assignment alpha(std::vector<bool>{true, true});
  EXPECT_FALSE(satisfies(f, alpha));
  EXPECT_EQ(count_satisfied(f, alpha), 2u);
  EXPECT_EQ(count_satisfied(f, Assignment(2)), 2u);
}
