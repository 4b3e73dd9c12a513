#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resetkit/resetkit.hpp"

namespace py = pybind11;
using namespace resetkit;

namespace {

Dfa make_dfa(std::size_t n, std::size_t m, std::vector<std::vector<State>> rows) {
  if (rows.size() != n) throw InputError("transition table must have one row per state");
  std::vector<State> table;
  table.reserve(n * m);
  for (const auto& row : rows) {
    if (row.size() != m) throw InputError("each row must have one entry per letter");
    table.insert(table.end(), row.begin(), row.end());
  }
  return Dfa(n, m, std::move(table));
}

std::vector<std::vector<State>> rows_of(const Dfa& a) {
  std::vector<std::vector<State>> rows(a.state_count());
  for (State q = 0; q < a.state_count(); ++q) {
    for (Letter c = 0; c < a.letter_count(); ++c) rows[q].push_back(a.next(q, c));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_resetkit, mod) {
  mod.doc() = "Synchronizing automata and reset words";

  py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<OracleFailure>(mod, "OracleFailure", PyExc_RuntimeError);

  py::class_<Dfa>(mod, "Dfa")
      .def(py::init(&make_dfa), py::arg("states"), py::arg("letters"), py::arg("table"),
           "Build from a table: table[q][c] is the successor of q on letter c.")
      .def_property_readonly("states", &Dfa::state_count)
      .def_property_readonly("letters", &Dfa::letter_count)
      .def("next", [](const Dfa& a, State q, Letter c) { return step(a, q, c); })
      .def("table", &rows_of)
      .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
      .def("__repr__", [](const Dfa& a) {
        return "<Dfa states=" + std::to_string(a.state_count()) +
               " letters=" + std::to_string(a.letter_count()) + ">";
      });

  mod.def("parse_dfa", [](const std::string& text) { return parse_dfa(text); });
  mod.def("serialize_dfa", [](const Dfa& a) { return serialize_dfa(a); });
  mod.def("cerny_automaton", &cerny_automaton, py::arg("n"));
  mod.def("is_reset_word", [](const Dfa& a, const Word& w) { return is_reset_word(a, w); });
  mod.def("is_synchronizing", &is_synchronizing);

  mod.def("shortest_reset_length", &shortest_reset_length, py::arg("dfa"),
          py::arg("budget") = kDefaultSubsetBudget);
  mod.def("shortest_reset_word", &shortest_reset_word, py::arg("dfa"),
          py::arg("budget") = kDefaultSubsetBudget);
  mod.def(
      "count_reset_words",
      [](const Dfa& a, std::size_t k, std::size_t budget) {
        // Python ints are arbitrary precision; go through the decimal string.
        return py::int_(py::str(count_reset_words(a, k, budget).str()));
      },
      py::arg("dfa"), py::arg("length"), py::arg("budget") = kDefaultSubsetBudget);
  mod.def("greedy_reset_word", py::overload_cast<const Dfa&>(&greedy_reset_word));

  mod.def(
      "shortest_length_via_oracle",
      [](const Dfa& a) -> std::optional<std::pair<std::size_t, std::size_t>> {
        auto oracle = Oracle::internal();
        auto r = shortest_length_via_oracle(a, oracle);
        if (!r) return std::nullopt;
        return std::make_pair(r->length, r->queries);
      },
      "Returns (length, queries) or None.");
  mod.def("shortest_word_via_oracle", [](const Dfa& a) {
    auto oracle = Oracle::internal();
    return shortest_word_via_oracle(a, oracle);
  });
  mod.def("has_reset_word_of_length", [](const Dfa& a, std::uint64_t k) {
    auto oracle = Oracle::internal();
    return has_reset_word_of_length(a, k, oracle);
  });

  mod.def("verify_sat_unsat", [](const std::string& phi, const std::string& psi) {
    return verify_sat_unsat(parse_dimacs(phi), parse_dimacs(psi)).to_string();
  });
  mod.def("verify_fsat", [](const std::string& phi) { return verify_fsat(parse_dimacs(phi)).to_string(); });
  mod.def("verify_maxsat", [](const std::string& phi) { return verify_maxsat(parse_dimacs(phi)).to_string(); });
  mod.def("verify_parsimony", [](const std::string& phi) {
    return verify_parsimony(parse_dimacs(phi)).to_string();
  });
  mod.def("build_maxsat_gadget", [](const std::string& phi) {
    return build_maxsat_gadget(parse_dimacs(phi)).automaton;
  });
  mod.def("max_sat_size", [](const std::string& phi) { return max_sat_size(parse_dimacs(phi)); });
}
