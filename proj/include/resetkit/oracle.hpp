#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "resetkit/cnf.hpp"
#include "resetkit/dpll.hpp"

namespace resetkit {

/// Environment variable naming an external SAT solver executable.
inline constexpr const char* kSolverEnvVar = "RESETKIT_SAT_SOLVER";

/// NP oracle: answers satisfiability questions with the internal DPLL or an
/// external SAT-competition style solver, and counts the questions asked.
///
/// Not thread-safe; use one instance per thread.
class Oracle {
 public:
  static Oracle internal(DpllLimits limits = {});
  static Oracle external(std::filesystem::path solver);
  /// External solver from RESETKIT_SAT_SOLVER when set and non-empty,
  /// otherwise the internal DPLL.
  static Oracle from_environment();

  /// One satisfiability question. Throws OracleFailure when an external
  /// solver crashes or answers unreadably.
  std::optional<Assignment> solve(const Cnf& f);

  std::size_t query_count() const noexcept { return queries_; }
  void reset_query_count() noexcept { queries_ = 0; }

  bool is_external() const noexcept { return !solver_.empty(); }
  const std::filesystem::path& solver_path() const noexcept { return solver_; }

 private:
  Oracle() = default;

  std::filesystem::path solver_;
  DpllLimits limits_;
  std::size_t queries_ = 0;
};

/// Parses SAT-competition solver output (`s ...` status line, `v ...` value
/// lines). `exit_code` 10/20 must agree with the status line when present.
std::optional<Assignment> parse_solver_output(std::string_view output,
                                              int exit_code, int variables);

}  // namespace resetkit
