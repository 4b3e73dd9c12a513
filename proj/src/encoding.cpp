#include "resetkit/encoding.hpp"

#include <string>

#include "resetkit/error.hpp"
#include "resetkit/pair_merge.hpp"

namespace resetkit {

Word EncodedQuery::decode(const Assignment& alpha) const {
  Word w;
  w.reserve(length);
  for (std::size_t t = 1; t <= length; ++t) {
    for (std::size_t c = 0; c < letters; ++c) {
      if (alpha.value(letter_var(t, static_cast<Letter>(c)))) {
        w.push_back(static_cast<Letter>(c));
        break;
      }
    }
  }
  return w;
}

EncodedQuery encode_short_reset(const Dfa& a, const BoundedResetQuery& query,
                                const EncodingOptions& options) {
  const auto n = a.state_count();
  const auto m = a.letter_count();
  const auto k = query.length;
  if (query.prefix.size() > k) {
    throw InputError("prefix of length " + std::to_string(query.prefix.size()) +
                     " exceeds target length " + std::to_string(k));
  }
  for (auto c : query.prefix) {
    if (c >= m) throw InputError("prefix letter out of range");
  }

  EncodedQuery out;
  out.states = n;
  out.letters = m;
  out.length = k;
  auto& clauses = out.cnf.clauses;
  const int first_aux = out.presence_var(0, k) + static_cast<int>(n);
  const int aux_count = n > 1 ? static_cast<int>(n - 1) : 0;
  out.cnf.variable_count = first_aux - 1 + aux_count;

  for (std::size_t q = 0; q < n; ++q) {
    clauses.push_back({out.presence_var(static_cast<State>(q), 0)});
  }

  for (std::size_t t = 1; t <= k; ++t) {
    Clause at_least_one;
    for (std::size_t c = 0; c < m; ++c) {
      at_least_one.push_back(out.letter_var(t, static_cast<Letter>(c)));
    }
    clauses.push_back(std::move(at_least_one));
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t d = c + 1; d < m; ++d) {
        clauses.push_back({-out.letter_var(t, static_cast<Letter>(c)),
                           -out.letter_var(t, static_cast<Letter>(d))});
      }
    }
    if (t <= query.prefix.size()) {
      clauses.push_back({out.letter_var(t, query.prefix[t - 1])});
    }
  }

  // s(q,t) and letter(t+1,c)  implies  s(delta(q,c), t+1)
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t q = 0; q < n; ++q) {
        auto target = a.next(static_cast<State>(q), static_cast<Letter>(c));
        clauses.push_back({-out.presence_var(static_cast<State>(q), t),
                           -out.letter_var(t + 1, static_cast<Letter>(c)),
                           out.presence_var(target, t + 1)});
      }
    }
  }

  // Sequential at-most-one over the last layer; aux r_i means "some of
  // x_1..x_i is true".
  if (n > 1) {
    auto x = [&](std::size_t i) {
      return out.presence_var(static_cast<State>(i - 1), k);
    };
    auto r = [&](std::size_t i) { return first_aux + static_cast<int>(i) - 1; };
    clauses.push_back({-x(1), r(1)});
    for (std::size_t i = 2; i < n; ++i) {
      clauses.push_back({-x(i), r(i)});
      clauses.push_back({-r(i - 1), r(i)});
      clauses.push_back({-x(i), -r(i - 1)});
    }
    clauses.push_back({-x(n), -r(n - 1)});
  }

  if (options.pair_distance_clauses && n > 1) {
    PairMergeTable pairs(a);
    for (std::size_t t = 0; t <= k; ++t) {
      const auto remaining = k - t;
      for (State q = 1; q < n; ++q) {
        for (State p = 0; p < q; ++p) {
          auto d = pairs.distance(p, q);
          if (d != PairMergeTable::kUnmergeable && d <= remaining) continue;
          clauses.push_back({-out.presence_var(p, t), -out.presence_var(q, t)});
        }
      }
    }
  }
  return out;
}

}  // namespace resetkit
