#pragma once

#include <cstddef>

#include "resetkit/cnf.hpp"
#include "resetkit/dfa.hpp"

namespace resetkit {

/// "Does the automaton have a reset word of exactly `length` letters that
/// starts with `prefix`?"
struct BoundedResetQuery {
  std::size_t length = 0;
  Word prefix;
};

struct EncodingOptions {
  /// Add the redundant clauses  not s(p,t) or not s(q,t)  for every pair that
  /// needs more than length-t letters to merge. They never cut off the exact
  /// image of a reset word, but let unit propagation refute hopeless prefixes.
  bool pair_distance_clauses = true;
};

/// CNF for a BoundedResetQuery.
///
/// Variables, in this order:
///   letter(t, c)   t in 1..length, one-hot per position;
///   presence(q, t) t in 0..length, "q may be in the image after t letters";
///   ladder auxiliaries for the at-most-one constraint on the last layer.
/// Layer 0 is all true and presence is pushed forward along the chosen
/// letters. Satisfying assignments over-approximate the true image, so an
/// at-most-one last layer forces the image to be a singleton.
struct EncodedQuery {
  Cnf cnf;
  std::size_t states = 0;
  std::size_t letters = 0;
  std::size_t length = 0;

  int letter_var(std::size_t t, Letter c) const {
    return static_cast<int>(1 + (t - 1) * letters + c);
  }
  int presence_var(State q, std::size_t t) const {
    return static_cast<int>(1 + length * letters + t * states + q);
  }

  /// The chosen letters of a satisfying assignment.
  Word decode(const Assignment& alpha) const;
};

/// Throws InputError when the prefix is longer than the target length or
/// uses letters outside the alphabet.
EncodedQuery encode_short_reset(const Dfa& a, const BoundedResetQuery& query,
                                const EncodingOptions& options = {});

}  // namespace resetkit
