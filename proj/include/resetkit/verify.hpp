#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "resetkit/brute_force.hpp"
#include "resetkit/cnf.hpp"
#include "resetkit/dfa.hpp"
#include "resetkit/exact.hpp"

namespace resetkit {

enum class ClaimStatus { Pass, Fail, Skip };

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Pass;
  std::string details;
};

/// Line-oriented verification report:
///   CLAIM <id> PASS|FAIL|SKIP <details>
///   RESULT PASS|FAIL
/// A skipped claim (cap exceeded) makes the result FAIL.
struct Report {
  std::vector<ClaimResult> claims;

  void add(std::string id, bool pass, std::string details);
  void skip(std::string id, std::string reason);

  bool passed() const;
  const ClaimResult* find(std::string_view id) const;
  std::string to_string() const;
};

struct VerifyOptions {
  int brute_force_cap = kDefaultBruteForceCap;
  std::size_t subset_budget = kDefaultSubsetBudget;
  /// Upper bound on reset words enumerated when checking decodes.
  std::size_t enumeration_limit = 1U << 16;
};

/// How a gadget's shortest length was obtained.
struct MeasuredLength {
  std::optional<std::size_t> length;
  std::string via;  // "bfs" or "sat"
};

/// Subset BFS within the budget, otherwise the SAT pipeline with the
/// internal DPLL.
MeasuredLength measure_shortest_length(const Dfa& a, std::size_t subset_budget);

Report verify_sat_unsat(const Cnf& phi, const Cnf& psi,
                        const VerifyOptions& options = {});
Report verify_fsat(const Cnf& phi, const VerifyOptions& options = {});
Report verify_maxsat(const Cnf& phi, const VerifyOptions& options = {});
Report verify_parsimony(const Cnf& phi, const VerifyOptions& options = {});

}  // namespace resetkit
