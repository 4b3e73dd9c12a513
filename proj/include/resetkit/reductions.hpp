#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resetkit/cnf.hpp"
#include "resetkit/dfa.hpp"

namespace resetkit {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Bit mask per (clause, variable): bit c set iff reading letter c at the
/// variable's position satisfies the clause (0 for a negative occurrence, 1
/// for a positive one).
class LiteralSets {
 public:
  LiteralSets(const Cnf& f, int variable_count);

  std::size_t clause_count() const noexcept { return clauses_; }
  int variable_count() const noexcept { return variables_; }

  /// clause in 0..n-1, variable in 1..k.
  std::uint8_t mask(std::size_t clause, int variable) const {
    return masks_[clause * static_cast<std::size_t>(variables_) +
                  static_cast<std::size_t>(variable - 1)];
  }
  bool contains(std::size_t clause, int variable, Letter c) const {
    return (mask(clause, variable) >> c) & 1U;
  }

 private:
  std::size_t clauses_;
  int variables_;
  std::vector<std::uint8_t> masks_;
};

// ---------------------------------------------------------------------------
// SAT-UNSAT -> SHORTEST-RESET-WORD

struct NormalizedPair {
  Cnf phi;
  Cnf psi;
  /// Total variables; psi's variables are k_phi+1..k.
  int variable_count = 0;
};

/// Renames psi's variables above phi's and pads the shorter formula by
/// repeating its last clause until both have the same number of clauses.
NormalizedPair normalize_pair(const Cnf& phi, const Cnf& psi);

struct SatUnsatGadget {
  Dfa automaton;
  NormalizedPair formulas;
  int k = 0;
  std::size_t clause_count = 0;
  State sink = 0;

  /// Both satisfiable: a reset word of this length exists.
  std::size_t both_sat_length() const { return static_cast<std::size_t>(k) + 2; }
  /// phi satisfiable, psi not: the shortest reset word has this length.
  std::size_t sat_unsat_length() const { return static_cast<std::size_t>(k) + 3; }
  /// phi unsatisfiable: every reset word is at least this long.
  std::size_t unsat_lower_bound() const { return static_cast<std::size_t>(k) + 4; }

  Metadata metadata() const;
};

SatUnsatGadget build_sat_unsat_gadget(const Cnf& phi, const Cnf& psi);

/// The reset word 0 1 w (plus a trailing 1 when `pad` is set) where w spells
/// the assignment bitwise.
Word assignment_word(const Assignment& alpha, bool pad = false);

// ---------------------------------------------------------------------------
// FSAT -> reset word of a given length

struct FsatGadget {
  Dfa automaton;
  /// The unary length parameter: solutions are reset words of this length.
  std::size_t target_length = 0;
  int variable_count = 0;
  /// decode_positions[j-1] is the word index holding the value of X_j.
  std::vector<std::size_t> decode_positions;

  Metadata metadata() const;
};

FsatGadget build_fsat_gadget(const Cnf& phi);

/// X_j is true iff the letter at its decode position is 1. A word whose
/// length differs from the target decodes to all-false.
Assignment decode_fsat(const FsatGadget& g, std::span<const Letter> w);

// ---------------------------------------------------------------------------
// MAX-SAT-SIZE -> length of a shortest reset word

struct MaxSatGadget {
  Dfa automaton;
  std::size_t clause_count = 0;  // n
  int variable_count = 0;        // k
  std::size_t lambda = 0;        // k + n(n+4)
  State sink = 0;
  State t = 0;

  static constexpr Letter kDollar = 2;

  /// 1 + lambda + k + m(n+4): length of a reset word when some assignment
  /// leaves at most m clauses unsatisfied.
  std::size_t length_for(std::size_t unsatisfied) const;

  Metadata metadata() const;
};

MaxSatGadget build_maxsat_gadget(const Cnf& phi);

/// n - ceil(max(0, l - 1 - lambda - k) / (n + 4)).
std::size_t recover_maxsat(const Cnf& phi, std::size_t shortest_length);

/// The zipper word 1 1 0^i 1 0^(n-i+1) that drives R(i,-2) to the sink.
Word zipper_word(std::size_t clause, std::size_t clause_count);

// ---------------------------------------------------------------------------
// Three letters {0, 1, $} -> two letters {0, 1}

/// Two-letter simulation of a 3-letter automaton with absorbing sink `s` and
/// special state `t`: every other state q becomes (q,0), (q,1), (q,2), t
/// becomes (t,0), (t,1), and s stays a single state. State order: the triples
/// for non-special states in index order, then (t,0), (t,1), s.
Dfa binarize(const Dfa& a, State s, State t);

/// Index of (q, phase) in binarize's output.
State binarized_state(const Dfa& a, State s, State t, State q, unsigned phase);

}  // namespace resetkit
