#pragma once

#include <cstdint>
#include <optional>

#include "resetkit/cnf.hpp"

namespace resetkit {

struct DpllLimits {
  /// 0 means unlimited; otherwise BudgetExceeded after this many decisions.
  std::uint64_t max_decisions = 0;
};

struct DpllStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
};

/// Complete DPLL: unit propagation with two watched literals, branching on
/// the first unassigned variable with the true branch first, chronological
/// backtracking. Returns a satisfying assignment or nullopt. An empty clause
/// makes the formula unsatisfiable.
std::optional<Assignment> dpll_solve(const Cnf& f, const DpllLimits& limits = {},
                                     DpllStats* stats = nullptr);

}  // namespace resetkit
