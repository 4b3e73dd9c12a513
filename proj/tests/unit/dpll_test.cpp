#include <gtest/gtest.h>

#include <random>

#include "testkit.hpp"

using namespace resetkit;

TEST(DpllTest, Examples) {
  auto model = dpll_solve(Cnf{1, {{1}}});
  ASSERT_TRUE(model);
  EXPECT_TRUE(model->value(1));
  EXPECT_FALSE(dpll_solve(Cnf{1, {{1}, {-1}}}));
}

TEST(DpllTest, EdgeCases) {
  EXPECT_TRUE(dpll_solve(Cnf{0, {}}));
  EXPECT_TRUE(dpll_solve(Cnf{3, {}}));
  EXPECT_FALSE(dpll_solve(Cnf{2, {{1}, {}}}));
  // Duplicate literals and tautologies.
  EXPECT_TRUE(dpll_solve(Cnf{2, {{1, 1, -1}, {-2, -2}}}));
  EXPECT_FALSE(dpll_solve(Cnf{1, {{1, 1}, {-1, -1}}}));
}

TEST(DpllTest, TrueBranchFirst) {
  // Unconstrained variables come out true.
  auto model = dpll_solve(Cnf{3, {{-2}}}).value();
  EXPECT_TRUE(model.value(1));
  EXPECT_FALSE(model.value(2));
  EXPECT_TRUE(model.value(3));
}

TEST(DpllTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    // Mostly small formulas; every 50th uses the full brute-force cap.
    int vars = trial % 50 == 0 ? 20 : 1 + static_cast<int>(rng() % 14);
    auto f = testkit::random_cnf(rng, vars, 1 + rng() % (4 * vars + 1));
    auto model = dpll_solve(f);
    EXPECT_EQ(model.has_value(), brute_sat(f).has_value());
    if (model) EXPECT_TRUE(satisfies(f, *model));
  }
}

TEST(DpllTest, PigeonholeIsUnsat) {
  // 5 pigeons, 4 holes.
  const int p = 5, h = 4;
  auto var = [&](int i, int j) { return i * h + j + 1; };
  Cnf f{p * h, {}};
  for (int i = 0; i < p; ++i) {
    Clause c;
    for (int j = 0; j < h; ++j) c.push_back(var(i, j));
    f.clauses.push_back(c);
  }
  for (int j = 0; j < h; ++j) {
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) f.clauses.push_back({-var(a, j), -var(b, j)});
    }
  }
  DpllStats stats;
  EXPECT_FALSE(dpll_solve(f, {}, &stats));
  EXPECT_GT(stats.decisions, 0u);
  EXPECT_THROW(dpll_solve(f, {3}), BudgetExceeded);
}
