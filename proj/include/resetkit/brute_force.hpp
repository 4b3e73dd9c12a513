#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "resetkit/cnf.hpp"

namespace resetkit {

inline constexpr int kDefaultBruteForceCap = 20;

// Exhaustive verification oracles. Assignments are visited in ascending
// binary order of (X_1, ..., X_k) with X_1 as the most significant bit. All
// throw BudgetExceeded when the variable count exceeds `cap`.

std::optional<Assignment> brute_sat(const Cnf& f,
                                    int cap = kDefaultBruteForceCap);
std::uint64_t count_sat(const Cnf& f, int cap = kDefaultBruteForceCap);
std::size_t max_sat_size(const Cnf& f, int cap = kDefaultBruteForceCap);

}  // namespace resetkit
