#include "resetkit/dpll.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "resetkit/error.hpp"

namespace resetkit {

namespace {

// Literal codes: 2*(v-1) for X_v, 2*(v-1)+1 for its negation.
inline std::uint32_t code(Literal lit) {
  auto v = static_cast<std::uint32_t>(std::abs(lit) - 1);
  return 2 * v + (lit < 0 ? 1U : 0U);
}

enum : std::int8_t { kFalse = 0, kTrue = 1, kUnassigned = 2 };

class Solver {
 public:
  explicit Solver(const Cnf& f)
      : vars_(static_cast<std::size_t>(f.variable_count)),
        value_(vars_, kUnassigned),
        watches_(2 * vars_) {
    for (const auto& clause : f.clauses) {
      if (clause.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      std::vector<std::uint32_t> lits;
      for (auto lit : clause) lits.push_back(code(lit));
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      bool tautology = false;
      for (std::size_t i = 1; i < lits.size(); ++i) {
        if ((lits[i] ^ lits[i - 1]) == 1U) tautology = true;
      }
      if (tautology) continue;
      if (lits.size() == 1) {
        units_.push_back(lits[0]);
        continue;
      }
      auto id = static_cast<std::uint32_t>(clauses_.size());
      watches_[lits[0]].push_back(id);
      watches_[lits[1]].push_back(id);
      clauses_.push_back(std::move(lits));
    }
  }

  std::optional<Assignment> solve(const DpllLimits& limits, DpllStats* stats) {
    auto result = search(limits);
    if (stats != nullptr) {
      stats->decisions = decisions_made_;
      stats->propagations = propagations_;
    }
    return result;
  }

 private:
  std::optional<Assignment> search(const DpllLimits& limits) {
    if (trivially_unsat_) return std::nullopt;
    for (auto lit : units_) {
      if (!enqueue(lit)) return std::nullopt;
    }
    std::size_t cursor = 0;
    while (true) {
      if (!propagate()) {
        // Chronological backtracking: flip the deepest untried decision.
        while (!decisions_.empty() && decisions_.back().flipped) {
          undo_to(decisions_.back().trail_size);
          decisions_.pop_back();
        }
        if (decisions_.empty()) return std::nullopt;
        auto& top = decisions_.back();
        undo_to(top.trail_size);
        top.flipped = true;
        cursor = std::min(cursor, static_cast<std::size_t>(top.lit / 2));
        enqueue(top.lit ^ 1U);
        continue;
      }
      while (cursor < vars_ && value_[cursor] != kUnassigned) ++cursor;
      if (cursor == vars_) break;
      if (limits.max_decisions != 0 && decisions_made_ >= limits.max_decisions) {
        throw BudgetExceeded("DPLL decision budget exceeded");
      }
      ++decisions_made_;
      auto lit = static_cast<std::uint32_t>(2 * cursor);
      decisions_.push_back({lit, trail_.size(), false});
      enqueue(lit);
    }
    std::vector<bool> values(vars_);
    for (std::size_t v = 0; v < vars_; ++v) values[v] = value_[v] == kTrue;
    return Assignment(std::move(values));
  }

  struct Decision {
    std::uint32_t lit;
    std::size_t trail_size;
    bool flipped;
  };

  std::int8_t lit_value(std::uint32_t lit) const {
    auto v = value_[lit / 2];
    if (v == kUnassigned) return kUnassigned;
    return (lit & 1U) ? static_cast<std::int8_t>(1 - v) : v;
  }

  bool enqueue(std::uint32_t lit) {
    auto v = lit_value(lit);
    if (v == kTrue) return true;
    if (v == kFalse) return false;
    value_[lit / 2] = (lit & 1U) ? kFalse : kTrue;
    trail_.push_back(lit);
    return true;
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      value_[trail_.back() / 2] = kUnassigned;
      trail_.pop_back();
    }
    head_ = std::min(head_, size);
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      auto false_lit = trail_[head_++] ^ 1U;
      ++propagations_;
      auto& watch = watches_[false_lit];
      std::size_t keep = 0;
      bool conflict = false;
      for (std::size_t i = 0; i < watch.size(); ++i) {
        auto id = watch[i];
        if (conflict) {
          watch[keep++] = id;
          continue;
        }
        auto& lits = clauses_[id];
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        if (lit_value(lits[0]) == kTrue) {
          watch[keep++] = id;
          continue;
        }
        bool moved = false;
        for (std::size_t j = 2; j < lits.size(); ++j) {
          if (lit_value(lits[j]) != kFalse) {
            std::swap(lits[1], lits[j]);
            watches_[lits[1]].push_back(id);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watch[keep++] = id;
        if (!enqueue(lits[0])) conflict = true;
      }
      watch.resize(keep);
      if (conflict) return false;
    }
    return true;
  }

  std::size_t vars_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<std::vector<std::uint32_t>> clauses_;
  std::vector<std::uint32_t> units_;
  std::vector<std::uint32_t> trail_;
  std::vector<Decision> decisions_;
  std::size_t head_ = 0;
  std::uint64_t decisions_made_ = 0;
  std::uint64_t propagations_ = 0;
  bool trivially_unsat_ = false;
};

}  // namespace

std::optional<Assignment> dpll_solve(const Cnf& f, const DpllLimits& limits,
                                     DpllStats* stats) {
  f.validate(true);
  return Solver(f).solve(limits, stats);
}

}  // namespace resetkit
