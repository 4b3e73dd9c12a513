#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace resetkit {

/// Nonzero DIMACS literal: +j is X_j, -j is not X_j.
using Literal = int;
using Clause = std::vector<Literal>;

struct Cnf {
  int variable_count = 0;
  std::vector<Clause> clauses;

  /// Throws InputError on literal 0, |literal| > variable_count, or an empty
  /// clause (unless allow_empty_clause is set for unsat fixtures).
  void validate(bool allow_empty_clause = false) const;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Total truth assignment for X_1..X_k.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t variables, bool value = false)
      : values_(variables, value) {}
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  std::size_t variable_count() const noexcept { return values_.size(); }

  /// 1-based variable index.
  bool value(int variable) const { return values_.at(variable - 1); }
  void set(int variable, bool v) { values_.at(variable - 1) = v; }

  bool satisfies(Literal lit) const {
    return lit > 0 ? value(lit) : !value(-lit);
  }

  const std::vector<bool>& values() const noexcept { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

bool satisfies(const Cnf& f, const Assignment& alpha);
std::size_t count_satisfied(const Cnf& f, const Assignment& alpha);

/// Standard DIMACS CNF: `c` comments, `p cnf <vars> <clauses>`, clauses
/// terminated by 0. Throws ParseError.
Cnf parse_dimacs(std::string_view text);
std::string write_dimacs(const Cnf& f);

}  // namespace resetkit
