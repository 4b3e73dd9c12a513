#include "resetkit/verify.hpp"

#include <sstream>

#include "resetkit/error.hpp"
#include "resetkit/oracle.hpp"
#include "resetkit/reductions.hpp"
#include "resetkit/sat_pipeline.hpp"

namespace resetkit {

void Report::add(std::string id, bool pass, std::string details) {
  claims.push_back({std::move(id), pass ? ClaimStatus::Pass : ClaimStatus::Fail,
                    std::move(details)});
}

void Report::skip(std::string id, std::string reason) {
  claims.push_back({std::move(id), ClaimStatus::Skip, std::move(reason)});
}

bool Report::passed() const {
  if (claims.empty()) return false;
  for (const auto& c : claims) {
    if (c.status != ClaimStatus::Pass) return false;
  }
  return true;
}

const ClaimResult* Report::find(std::string_view id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string Report::to_string() const {
  std::ostringstream out;
  for (const auto& c : claims) {
    const char* status = c.status == ClaimStatus::Pass   ? "PASS"
                         : c.status == ClaimStatus::Fail ? "FAIL"
                                                         : "SKIP";
    out << "CLAIM " << c.id << ' ' << status;
    if (!c.details.empty()) out << ' ' << c.details;
    out << '\n';
  }
  out << "RESULT " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

MeasuredLength measure_shortest_length(const Dfa& a, std::size_t subset_budget) {
  try {
    return {shortest_reset_length(a, subset_budget), "bfs"};
  } catch (const BudgetExceeded&) {
    auto oracle = Oracle::internal();
    auto result = shortest_length_via_oracle(a, oracle);
    if (!result) return {std::nullopt, "sat"};
    return {result->length, "sat"};
  }
}

namespace {

std::string length_text(const MeasuredLength& m) {
  return (m.length ? std::to_string(*m.length) : std::string("none")) +
         " via=" + m.via;
}

std::string bool_text(bool b) { return b ? "yes" : "no"; }

}  // namespace

Report verify_sat_unsat(const Cnf& phi, const Cnf& psi,
                        const VerifyOptions& options) {
  Report report;
  try {
    auto gadget = build_sat_unsat_gadget(phi, psi);
    const auto& f = gadget.formulas;
    const auto k = gadget.k;
    report.add("gadget", true,
               "states=" + std::to_string(gadget.automaton.state_count()) +
                   " k=" + std::to_string(k) +
                   " n=" + std::to_string(gadget.clause_count));

    auto phi_model = brute_sat(f.phi, options.brute_force_cap);
    auto psi_model = brute_sat(f.psi, options.brute_force_cap);
    auto measured = measure_shortest_length(gadget.automaton, options.subset_budget);
    const auto shortest = measured.length;
    const std::string numbers = "shortest=" + length_text(measured) +
                                " phi_sat=" + bool_text(phi_model.has_value()) +
                                " psi_sat=" + bool_text(psi_model.has_value());

    if (phi_model && psi_model) {
      // One assignment satisfies both: the formulas share no variable.
      Assignment both(static_cast<std::size_t>(k));
      for (int j = 1; j <= phi.variable_count; ++j) both.set(j, phi_model->value(j));
      for (int j = phi.variable_count + 1; j <= k; ++j) both.set(j, psi_model->value(j));
      auto w = assignment_word(both);
      report.add("witness", is_reset_word(gadget.automaton, w),
                 "word=" + format_word(w));
      report.add("claim1",
                 shortest.has_value() && *shortest == gadget.both_sat_length(),
                 numbers + " expected=" + std::to_string(gadget.both_sat_length()));
    } else if (phi_model) {
      auto w = assignment_word(*phi_model, true);
      report.add("witness", is_reset_word(gadget.automaton, w),
                 "word=" + format_word(w));
      report.add("claim2",
                 shortest.has_value() && *shortest == gadget.sat_unsat_length(),
                 numbers + " expected=" + std::to_string(gadget.sat_unsat_length()));
    } else {
      report.add("claim3",
                 !shortest.has_value() || *shortest >= gadget.unsat_lower_bound(),
                 numbers + " expected>=" + std::to_string(gadget.unsat_lower_bound()));
    }
  } catch (const BudgetExceeded& e) {
    report.skip("budget", e.what());
  }
  return report;
}

Report verify_fsat(const Cnf& phi, const VerifyOptions& options) {
  Report report;
  try {
    auto gadget = build_fsat_gadget(phi);
    const auto K = gadget.target_length;
    report.add("gadget", true,
               "states=" + std::to_string(gadget.automaton.state_count()) +
                   " K=" + std::to_string(K));
    auto model = brute_sat(phi, options.brute_force_cap);
    auto words = enumerate_reset_words(gadget.automaton, K,
                                       options.enumeration_limit,
                                       options.subset_budget);
    if (model) {
      auto w = assignment_word(*model);
      report.add("existence", !words.empty() && is_reset_word(gadget.automaton, w),
                 "reset_words_at_K=" + std::to_string(words.size()) +
                     " witness=" + format_word(w));
      std::size_t bad = 0;
      for (const auto& word : words) {
        if (!satisfies(phi, decode_fsat(gadget, word))) ++bad;
      }
      bool complete = words.size() < options.enumeration_limit;
      report.add("decode", bad == 0 && complete,
                 "checked=" + std::to_string(words.size()) +
                     " failing=" + std::to_string(bad) +
                     (complete ? "" : " truncated"));
    } else {
      report.add("no-solution", words.empty(),
                 words.empty() ? "no reset word at K=" + std::to_string(K)
                               : "unexpected reset word " + format_word(words.front()));
    }
  } catch (const BudgetExceeded& e) {
    report.skip("budget", e.what());
  }
  return report;
}

Report verify_parsimony(const Cnf& phi, const VerifyOptions& options) {
  Report report;
  try {
    auto gadget = build_fsat_gadget(phi);
    auto words = count_reset_words(gadget.automaton, gadget.target_length,
                                   options.subset_budget);
    auto models = count_sat(phi, options.brute_force_cap);
    report.add("parsimony", words == BigCount(models),
               "reset_words=" + words.str() + " models=" + std::to_string(models) +
                   " K=" + std::to_string(gadget.target_length));
  } catch (const BudgetExceeded& e) {
    report.skip("budget", e.what());
  }
  return report;
}

Report verify_maxsat(const Cnf& phi, const VerifyOptions& options) {
  Report report;
  try {
    auto gadget = build_maxsat_gadget(phi);
    const auto n = gadget.clause_count;
    report.add("gadget", true,
               "states=" + std::to_string(gadget.automaton.state_count()) +
                   " n=" + std::to_string(n) + " k=" +
                   std::to_string(gadget.variable_count) +
                   " lambda=" + std::to_string(gadget.lambda));
    auto best = max_sat_size(phi, options.brute_force_cap);
    auto measured = measure_shortest_length(gadget.automaton, options.subset_budget);
    if (!measured.length) {
      report.add("synchronizing", false, "gadget is not synchronizing");
      return report;
    }
    const auto l = *measured.length;
    const auto unsatisfied = n - best;

    // For every m: some assignment leaves <= m clauses unsatisfied iff a reset
    // word of length 1+lambda+k+m(n+4) exists (iff that length >= shortest).
    std::string mismatches;
    for (std::size_t m = 0; m <= n; ++m) {
      bool formula_side = m >= unsatisfied;
      bool automaton_side = gadget.length_for(m) >= l;
      if (formula_side != automaton_side) mismatches += " m=" + std::to_string(m);
    }
    report.add("length-equivalence", mismatches.empty(),
               "l=" + length_text(measured) + " max_sat=" + std::to_string(best) +
                   (mismatches.empty() ? "" : " mismatch:" + mismatches));
    if (unsatisfied > 0) {
      report.add("exact-length", l == gadget.length_for(unsatisfied),
                 "l=" + std::to_string(l) +
                     " expected=" + std::to_string(gadget.length_for(unsatisfied)));
    }
    auto recovered = recover_maxsat(phi, l);
    report.add("recover", recovered == best,
               "l=" + std::to_string(l) + " recovered=" + std::to_string(recovered) +
                   " max_sat=" + std::to_string(best));
  } catch (const BudgetExceeded& e) {
    report.skip("budget", e.what());
  }
  return report;
}

}  // namespace resetkit
