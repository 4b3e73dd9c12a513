#include "resetkit/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "resetkit/error.hpp"

namespace resetkit {

LiteralSets::LiteralSets(const Cnf& f, int variable_count)
    : clauses_(f.clauses.size()),
      variables_(variable_count),
      masks_(f.clauses.size() * static_cast<std::size_t>(variable_count), 0) {
  f.validate();
  if (f.variable_count > variable_count) {
    throw InputError("formula uses more variables than the literal sets cover");
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    for (auto lit : f.clauses[i]) {
      auto var = static_cast<std::size_t>(std::abs(lit));
      masks_[i * static_cast<std::size_t>(variables_) + var - 1] |=
          static_cast<std::uint8_t>(lit > 0 ? 0b10 : 0b01);
    }
  }
}

namespace {

constexpr State kUnset = std::numeric_limits<State>::max();

// Incrementally assembles a labelled automaton; every transition must be set
// before finish().
class GadgetBuilder {
 public:
  explicit GadgetBuilder(std::size_t letters) : letters_(letters) {}

  State add(std::string label) {
    labels_.push_back(std::move(label));
    table_.resize(table_.size() + letters_, kUnset);
    return static_cast<State>(labels_.size() - 1);
  }

  void set(State q, Letter c, State target) {
    table_[static_cast<std::size_t>(q) * letters_ + c] = target;
  }
  void set_all(State q, State target) {
    for (std::size_t c = 0; c < letters_; ++c) set(q, static_cast<Letter>(c), target);
  }

  Dfa finish(std::vector<std::string> letter_labels) && {
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] == kUnset) {
        throw std::logic_error("gadget transition left unset at state " +
                               labels_[i / letters_]);
      }
    }
    auto n = labels_.size();
    return Dfa(n, letters_, std::move(table_), std::move(labels_),
               std::move(letter_labels));
  }

 private:
  std::size_t letters_;
  std::vector<std::string> labels_;
  std::vector<State> table_;
};

// Shared skeleton of the binary-alphabet gadgets.
//
//  * s is absorbing.
//  * t1, t2 detect the first occurrence of the factor 01 (t1 -0-> t2,
//    t1 -1-> t1, t2 -0-> t2, t2 -1-> C_1) and feed a clock C_1 .. C_k with
//    C_j -> C_{j+1} and C_k -> s on both letters. So t1 needs exactly
//    2 + k letters, which pins every reset word to length >= k + 2 and forces
//    any reset word of length k + 2 to start with 01.
//  * Each clause gets a chain (bot, top, 1..k). bot/top form the same 01
//    detector and enter position 1; position j goes to s on the clause's
//    satisfying letters for X_j and otherwise to position j+1; position k
//    falls off into the clock at a configurable distance from s.
class ChainGadget {
 public:
  explicit ChainGadget(int k) : builder_(2), k_(k) {
    sink_ = builder_.add("s");
    t1_ = builder_.add("t1");
    t2_ = builder_.add("t2");
    for (int j = 1; j <= k; ++j) clock_.push_back(builder_.add("C" + std::to_string(j)));
    builder_.set_all(sink_, sink_);
    builder_.set(t1_, 0, t2_);
    builder_.set(t1_, 1, t1_);
    builder_.set(t2_, 0, t2_);
    builder_.set(t2_, 1, clock_.front());
    for (int j = 0; j < k; ++j) {
      builder_.set_all(clock_[j], j + 1 < k ? clock_[j + 1] : sink_);
    }
  }

  State sink() const noexcept { return sink_; }

  /// Clock state from which exactly `steps` letters reach s (1 <= steps <= k).
  State clock_at_distance(int steps) const { return clock_[k_ - steps]; }

  void add_chains(const Cnf& f, const std::string& name, State exhausted) {
    LiteralSets sets(f, k_);
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      auto prefix = name + std::to_string(i + 1) + "_";
      auto bot = builder_.add(prefix + "bot");
      auto top = builder_.add(prefix + "top");
      std::vector<State> pos;
      for (int j = 1; j <= k_; ++j) pos.push_back(builder_.add(prefix + std::to_string(j)));
      builder_.set(bot, 0, top);
      builder_.set(bot, 1, bot);
      builder_.set(top, 0, top);
      builder_.set(top, 1, pos.front());
      for (int j = 1; j <= k_; ++j) {
        auto advance = j < k_ ? pos[static_cast<std::size_t>(j)] : exhausted;
        for (Letter c = 0; c < 2; ++c) {
          builder_.set(pos[static_cast<std::size_t>(j - 1)], c,
                       sets.contains(i, j, c) ? sink_ : advance);
        }
      }
    }
  }

  Dfa finish() && { return std::move(builder_).finish({"0", "1"}); }

 private:
  GadgetBuilder builder_;
  int k_;
  State sink_ = 0;
  State t1_ = 0;
  State t2_ = 0;
  std::vector<State> clock_;
};

void require_nonempty(const Cnf& f, const char* name) {
  f.validate();
  if (f.clauses.empty()) {
    throw InputError(std::string(name) + " must have at least one clause");
  }
  if (f.variable_count < 1) {
    throw InputError(std::string(name) + " must have at least one variable");
  }
}

Cnf pad_to(Cnf f, std::size_t clauses) {
  while (f.clauses.size() < clauses) f.clauses.push_back(f.clauses.back());
  return f;
}

std::string join_positions(const std::vector<std::size_t>& positions) {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(positions[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

NormalizedPair normalize_pair(const Cnf& phi, const Cnf& psi) {
  require_nonempty(phi, "phi");
  require_nonempty(psi, "psi");
  NormalizedPair out;
  out.phi = phi;
  out.psi = psi;
  const int shift = phi.variable_count;
  for (auto& clause : out.psi.clauses) {
    for (auto& lit : clause) lit += lit > 0 ? shift : -shift;
  }
  out.variable_count = phi.variable_count + psi.variable_count;
  out.phi.variable_count = out.variable_count;
  out.psi.variable_count = out.variable_count;
  auto n = std::max(phi.clauses.size(), psi.clauses.size());
  out.phi = pad_to(std::move(out.phi), n);
  out.psi = pad_to(std::move(out.psi), n);
  return out;
}

SatUnsatGadget build_sat_unsat_gadget(const Cnf& phi, const Cnf& psi) {
  auto formulas = normalize_pair(phi, psi);
  const int k = formulas.variable_count;
  // Both formulas contribute at least one variable, so k >= 2 and the
  // distance-2 clock state exists.
  ChainGadget gadget(k);
  // psi chains fall off one step before s (word 01w1 resets when psi is
  // unsatisfied), phi chains two steps before (no reset in k+3 letters when
  // phi is unsatisfied).
  gadget.add_chains(formulas.phi, "P", gadget.clock_at_distance(2));
  gadget.add_chains(formulas.psi, "Q", gadget.clock_at_distance(1));
  auto sink = gadget.sink();
  auto n = formulas.phi.clauses.size();
  return SatUnsatGadget{std::move(gadget).finish(), std::move(formulas), k, n,
                        sink};
}

Metadata SatUnsatGadget::metadata() const {
  return {{"kind", "satunsat"},
          {"k", std::to_string(k)},
          {"n", std::to_string(clause_count)},
          {"sink", std::to_string(sink)},
          {"len_sat_sat", std::to_string(both_sat_length())},
          {"len_sat_unsat", std::to_string(sat_unsat_length())},
          {"len_unsat_min", std::to_string(unsat_lower_bound())}};
}

Word assignment_word(const Assignment& alpha, bool pad) {
  Word w{0, 1};
  for (bool v : alpha.values()) w.push_back(v ? 1 : 0);
  if (pad) w.push_back(1);
  return w;
}

// ---------------------------------------------------------------------------

FsatGadget build_fsat_gadget(const Cnf& phi) {
  require_nonempty(phi, "phi");
  const int k = phi.variable_count;
  ChainGadget gadget(k);
  gadget.add_chains(phi, "P", gadget.clock_at_distance(1));
  FsatGadget out{std::move(gadget).finish(), static_cast<std::size_t>(k) + 2, k, {}};
  for (int j = 1; j <= k; ++j) out.decode_positions.push_back(static_cast<std::size_t>(j) + 1);
  return out;
}

Metadata FsatGadget::metadata() const {
  return {{"kind", "fsat"},
          {"K", std::to_string(target_length)},
          {"k", std::to_string(variable_count)},
          {"decode", join_positions(decode_positions)}};
}

Assignment decode_fsat(const FsatGadget& g, std::span<const Letter> w) {
  Assignment alpha(static_cast<std::size_t>(g.variable_count));
  if (w.size() != g.target_length) return alpha;
  for (int j = 1; j <= g.variable_count; ++j) {
    alpha.set(j, w[g.decode_positions[static_cast<std::size_t>(j - 1)]] == 1);
  }
  return alpha;
}

// ---------------------------------------------------------------------------

MaxSatGadget build_maxsat_gadget(const Cnf& phi) {
  require_nonempty(phi, "phi");
  const auto n = phi.clauses.size();
  const int k = phi.variable_count;
  const std::size_t lambda = static_cast<std::size_t>(k) + n * (n + 4);
  constexpr Letter kDollar = MaxSatGadget::kDollar;
  LiteralSets sets(phi, k);

  GadgetBuilder b(3);
  auto sink = b.add("s");
  auto t = b.add("t");
  b.set_all(sink, sink);
  b.set(t, 0, t);
  b.set(t, 1, t);
  b.set(t, kDollar, sink);

  for (std::size_t i = 1; i <= n; ++i) {
    auto prefix = std::to_string(i) + "_";
    std::vector<State> p;
    std::vector<State> q;
    std::vector<State> r;  // r[j + 2] is R(i, j) for j in -2..n+1
    for (std::size_t j = 1; j <= lambda; ++j) p.push_back(b.add("P" + prefix + std::to_string(j)));
    for (int j = 1; j <= k; ++j) q.push_back(b.add("Q" + prefix + std::to_string(j)));
    for (long j = -2; j <= static_cast<long>(n) + 1; ++j) {
      r.push_back(b.add("R" + prefix + std::to_string(j)));
    }
    const State entry = p.front();
    auto rs = [&](long j) { return r[static_cast<std::size_t>(j + 2)]; };

    // 1^lambda walks P(i,1) .. P(i,lambda) into Q(i,1); 0 restarts.
    for (std::size_t j = 0; j < lambda; ++j) {
      b.set(p[j], 1, j + 1 < lambda ? p[j + 1] : q.front());
      b.set(p[j], 0, entry);
      b.set(p[j], kDollar, entry);
    }
    for (int j = 1; j <= k; ++j) {
      auto advance = j < k ? q[static_cast<std::size_t>(j)] : rs(-2);
      for (Letter c = 0; c < 2; ++c) {
        b.set(q[static_cast<std::size_t>(j - 1)], c,
              sets.contains(i - 1, j, c) ? sink : advance);
      }
      b.set(q[static_cast<std::size_t>(j - 1)], kDollar, entry);
    }
    const auto ni = static_cast<long>(n);
    const auto ii = static_cast<long>(i);
    for (long j = -2; j <= ni + 1; ++j) {
      b.set(rs(j), kDollar, entry);
      if (j == -2 || j == -1 || j == ii) {
        b.set(rs(j), 1, rs(j + 1));
        b.set(rs(j), 0, rs(-2));
      } else if (j <= ni) {
        b.set(rs(j), 1, rs(-2));
        b.set(rs(j), 0, rs(j + 1));
      } else {
        b.set(rs(j), 1, rs(-2));
        b.set(rs(j), 0, sink);
      }
    }
  }
  return MaxSatGadget{std::move(b).finish({"0", "1", "$"}), n, k, lambda, sink, t};
}

std::size_t MaxSatGadget::length_for(std::size_t unsatisfied) const {
  return 1 + lambda + static_cast<std::size_t>(variable_count) +
         unsatisfied * (clause_count + 4);
}

Metadata MaxSatGadget::metadata() const {
  return {{"kind", "maxsat"},
          {"n", std::to_string(clause_count)},
          {"k", std::to_string(variable_count)},
          {"lambda", std::to_string(lambda)},
          {"sink", std::to_string(sink)},
          {"t", std::to_string(t)}};
}

std::size_t recover_maxsat(const Cnf& phi, std::size_t shortest_length) {
  const auto n = phi.clauses.size();
  const auto k = static_cast<std::size_t>(phi.variable_count);
  const auto lambda = k + n * (n + 4);
  const auto base = 1 + lambda + k;
  const auto excess = shortest_length > base ? shortest_length - base : 0;
  const auto blocks = (excess + n + 3) / (n + 4);
  return blocks >= n ? 0 : n - blocks;
}

Word zipper_word(std::size_t clause, std::size_t clause_count) {
  if (clause < 1 || clause > clause_count) throw InputError("clause index out of range");
  Word w{1, 1};
  w.insert(w.end(), clause, 0);
  w.push_back(1);
  w.insert(w.end(), clause_count - clause + 1, 0);
  return w;
}

// ---------------------------------------------------------------------------

State binarized_state(const Dfa& a, State s, State t, State q, unsigned phase) {
  const auto n = a.state_count();
  const auto others = static_cast<State>(n - 2);
  if (q == s) return 3 * others + 2;
  if (q == t) {
    if (phase > 1) throw InputError("(t,2) does not exist in the binarized automaton");
    return 3 * others + phase;
  }
  if (phase > 2) throw InputError("phase out of range");
  State rank = q;
  if (q > s) --rank;
  if (q > t) --rank;
  return 3 * rank + phase;
}

Dfa binarize(const Dfa& a, State s, State t) {
  if (a.letter_count() != 3) throw InputError("binarize expects letters {0, 1, $}");
  if (s >= a.state_count() || t >= a.state_count() || s == t) {
    throw InputError("binarize needs two distinct special states");
  }
  for (Letter c = 0; c < 3; ++c) {
    if (a.next(s, c) != s) throw InputError("binarize: s is not absorbing");
  }
  constexpr Letter kDollar = 2;
  const auto n = a.state_count();
  const auto out_states = 3 * (n - 2) + 3;
  std::vector<State> table(out_states * 2);
  std::vector<std::string> labels(out_states);
  auto id = [&](State q, unsigned phase) { return binarized_state(a, s, t, q, phase); };
  auto set = [&](State from, Letter c, State to) { table[static_cast<std::size_t>(from) * 2 + c] = to; };
  auto name = [&](State q) {
    auto label = a.state_label(q);
    return label.empty() ? std::to_string(q) : std::string(label);
  };

  for (State q = 0; q < n; ++q) {
    if (q == s || q == t) continue;
    for (unsigned phase = 0; phase < 3; ++phase) {
      labels[id(q, phase)] = "(" + name(q) + "," + std::to_string(phase) + ")";
    }
    set(id(q, 0), 0, id(q, 1));
    set(id(q, 0), 1, id(q, 2));
    set(id(q, 1), 0, id(q, 1));
    set(id(q, 1), 1, id(a.next(q, kDollar), 2));
    set(id(q, 2), 0, id(a.next(q, 0), 0));
    set(id(q, 2), 1, id(a.next(q, 1), 0));
  }
  labels[id(t, 0)] = "(" + name(t) + ",0)";
  labels[id(t, 1)] = "(" + name(t) + ",1)";
  labels[id(s, 0)] = name(s);
  set(id(t, 0), 0, id(s, 0));
  set(id(t, 0), 1, id(t, 1));
  set(id(t, 1), 0, id(t, 0));
  set(id(t, 1), 1, id(t, 1));
  set(id(s, 0), 0, id(s, 0));
  set(id(s, 0), 1, id(s, 0));
  return Dfa(out_states, 2, std::move(table), std::move(labels), {"0", "1"});
}

}  // namespace resetkit
