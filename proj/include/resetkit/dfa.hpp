#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resetkit/state_set.hpp"
#include "resetkit/types.hpp"

namespace resetkit {

/// Total deterministic automaton over dense state and letter indices.
///
/// The transition table is stored row-major: entry `q * letters + c` is the
/// successor of state `q` on letter `c`. Instances are immutable once built.
class Dfa {
 public:
  /// Throws InputError unless states >= 1, letters >= 1, the table has
  /// states*letters entries and every entry is a valid state.
  Dfa(std::size_t states, std::size_t letters, std::vector<State> table,
      std::vector<std::string> state_labels = {},
      std::vector<std::string> letter_labels = {});

  std::size_t state_count() const noexcept { return states_; }
  std::size_t letter_count() const noexcept { return letters_; }

  /// Unchecked transition; callers guarantee q < n and c < m.
  State next(State q, Letter c) const noexcept {
    return table_[static_cast<std::size_t>(q) * letters_ + c];
  }

  std::span<const State> table() const noexcept { return table_; }

  /// Labels are cosmetic; an empty string means "unnamed".
  std::string_view state_label(State q) const;
  std::string_view letter_label(Letter c) const;
  bool has_labels() const noexcept;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t states_;
  std::size_t letters_;
  std::vector<State> table_;
  std::vector<std::string> state_labels_;
  std::vector<std::string> letter_labels_;
};

State step(const Dfa& a, State q, Letter c);

/// Left fold of step over w; run(a, q, {}) == q.
State run(const Dfa& a, State q, std::span<const Letter> w);

/// { run(a, q, w) : q in s }. Throws InputError if s is empty or belongs to
/// an automaton of a different size.
StateSet image(const Dfa& a, const StateSet& s, std::span<const Letter> w);

bool is_reset_word(const Dfa& a, std::span<const Letter> w);

/// Pairwise criterion: every pair of states can be merged by some word.
bool is_synchronizing(const Dfa& a);

/// The Cerny automaton C_n: letter 0 rotates q -> q+1 mod n, letter 1 is the
/// identity except n-1 -> 0. Requires n >= 2.
Dfa cerny_automaton(std::size_t n);

/// A parsed automaton file; `metadata` keeps `meta <key> <value>` lines in
/// file order.
struct DfaDocument {
  Dfa automaton;
  std::vector<std::pair<std::string, std::string>> metadata;
};

DfaDocument parse_dfa_document(std::string_view text);
Dfa parse_dfa(std::string_view text);

std::string serialize_dfa(const Dfa& a);
std::string serialize_dfa(
    const Dfa& a,
    const std::vector<std::pair<std::string, std::string>>& metadata);

/// Comma-separated letter indices; "" is the empty word.
Word parse_word(std::string_view text);
std::string format_word(std::span<const Letter> w);

}  // namespace resetkit
