#include "resetkit/brute_force.hpp"

#include <algorithm>
#include <string>

#include "resetkit/error.hpp"

namespace resetkit {

namespace {

void check_cap(const Cnf& f, int cap) {
  f.validate(true);
  if (f.variable_count > cap) {
    throw BudgetExceeded("brute-force cap exceeded: " +
                         std::to_string(f.variable_count) + " variables > " +
                         std::to_string(cap));
  }
}

// Visits every assignment in ascending order; stops when visit returns true.
template <class Visit>
void for_each_assignment(int k, Visit&& visit) {
  const std::uint64_t total = std::uint64_t{1} << k;
  Assignment alpha(static_cast<std::size_t>(k));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int j = 1; j <= k; ++j) alpha.set(j, (bits >> (k - j)) & 1U);
    if (visit(alpha)) return;
  }
}

}  // namespace

std::optional<Assignment> brute_sat(const Cnf& f, int cap) {
  check_cap(f, cap);
  std::optional<Assignment> found;
  for_each_assignment(f.variable_count, [&](const Assignment& alpha) {
    if (!satisfies(f, alpha)) return false;
    found = alpha;
    return true;
  });
  return found;
}

std::uint64_t count_sat(const Cnf& f, int cap) {
  check_cap(f, cap);
  std::uint64_t count = 0;
  for_each_assignment(f.variable_count, [&](const Assignment& alpha) {
    if (satisfies(f, alpha)) ++count;
    return false;
  });
  return count;
}

std::size_t max_sat_size(const Cnf& f, int cap) {
  check_cap(f, cap);
  std::size_t best = 0;
  for_each_assignment(f.variable_count, [&](const Assignment& alpha) {
    best = std::max(best, count_satisfied(f, alpha));
    return best == f.clauses.size();
  });
  return best;
}

}  // namespace resetkit
