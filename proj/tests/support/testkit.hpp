// Random instance generators and brute-force oracles shared by the tests.
// The oracles here deliberately avoid the library's search code: they
// enumerate words or walk subsets with plain std containers.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "resetkit/resetkit.hpp"

namespace testkit {

using resetkit::Cnf;
using resetkit::Dfa;
using resetkit::Letter;
using resetkit::State;
using resetkit::Word;

inline Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::vector<State> table(n * m);
  for (auto& t : table) t = pick(rng);
  return Dfa(n, m, std::move(table));
}

inline std::vector<bool> apply_naive(const Dfa& a, std::vector<bool> set, Letter c) {
  std::vector<bool> out(set.size(), false);
  for (State q = 0; q < set.size(); ++q) {
    if (set[q]) out[a.table()[q * a.letter_count() + c]] = true;
  }
  return out;
}

inline bool naive_is_singleton(const std::vector<bool>& set) {
  std::size_t count = 0;
  for (bool b : set) count += b ? 1 : 0;
  return count == 1;
}

/// Applies w to Q directly from the raw table.
inline bool naive_resets(const Dfa& a, const Word& w) {
  std::vector<bool> set(a.state_count(), true);
  for (Letter c : w) set = apply_naive(a, set, c);
  return naive_is_singleton(set);
}

/// Shortest reset length by plain BFS over std::set of subsets.
inline std::optional<std::size_t> naive_shortest(const Dfa& a) {
  std::vector<bool> full(a.state_count(), true);
  if (naive_is_singleton(full)) return 0;
  std::set<std::vector<bool>> seen{full};
  std::vector<std::vector<bool>> frontier{full};
  for (std::size_t depth = 1; !frontier.empty(); ++depth) {
    std::vector<std::vector<bool>> next;
    for (const auto& s : frontier) {
      for (Letter c = 0; c < a.letter_count(); ++c) {
        auto t = apply_naive(a, s, c);
        if (naive_is_singleton(t)) return depth;
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// Calls f on every word of Sigma^k in lexicographic order.
template <class F>
void for_each_word(std::size_t m, std::size_t k, F&& f) {
  Word w(k, 0);
  while (true) {
    f(w);
    std::size_t i = k;
    while (i > 0 && w[i - 1] + 1 == m) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

inline std::uint64_t naive_count(const Dfa& a, std::size_t k) {
  std::uint64_t count = 0;
  for_each_word(a.letter_count(), k, [&](const Word& w) { count += naive_resets(a, w) ? 1 : 0; });
  return count;
}

inline std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Uniform DFA with n in [1, max_n], m in [1, max_m], resampled until
/// synchronizing.
inline Dfa random_synchronizing(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  std::uniform_int_distribution<std::size_t> pick_m(1, max_m);
  while (true) {
    auto n = pick_n(rng);
    auto m = pick_m(rng);
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto a = random_dfa(rng, n, m);
      if (naive_shortest(a)) return a;
    }
  }
}

inline std::vector<Dfa> corpus(std::uint64_t seed, std::size_t size, std::size_t max_n = 8,
                               std::size_t max_m = 3) {
  std::mt19937_64 rng(seed);
  std::vector<Dfa> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) out.push_back(random_synchronizing(rng, max_n, max_m));
  return out;
}

/// Random CNF over exactly `vars` variables with `clauses` clauses of
/// width 1..3 (distinct variables within a clause).
inline Cnf random_cnf(std::mt19937_64& rng, int vars, std::size_t clauses) {
  Cnf f;
  f.variable_count = vars;
  std::uniform_int_distribution<int> pick_var(1, vars);
  std::uniform_int_distribution<int> pick_width(1, std::min(3, vars));
  std::bernoulli_distribution sign(0.5);
  for (std::size_t i = 0; i < clauses; ++i) {
    int width = pick_width(rng);
    resetkit::Clause c;
    while (static_cast<int>(c.size()) < width) {
      int v = pick_var(rng);
      bool dup = false;
      for (int lit : c) dup = dup || std::abs(lit) == v;
      if (!dup) c.push_back(sign(rng) ? v : -v);
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

/// Number of clauses satisfied when bit j-1 of `bits` is X_j.
inline std::size_t naive_satisfied(const Cnf& f, std::uint64_t bits) {
  std::size_t sat = 0;
  for (const auto& c : f.clauses) {
    bool any = false;
    for (int lit : c) {
      bool v = (bits >> (std::abs(lit) - 1)) & 1U;
      any = any || (lit > 0 ? v : !v);
    }
    sat += any ? 1 : 0;
  }
  return sat;
}

inline std::uint64_t naive_model_count(const Cnf& f) {
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.variable_count); ++bits) {
    count += naive_satisfied(f, bits) == f.clauses.size() ? 1 : 0;
  }
  return count;
}

inline bool naive_sat(const Cnf& f) { return naive_model_count(f) > 0; }

inline std::size_t naive_max_sat(const Cnf& f) {
  std::size_t best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.variable_count); ++bits) {
    best = std::max(best, naive_satisfied(f, bits));
  }
  return best;
}

}  // namespace testkit
