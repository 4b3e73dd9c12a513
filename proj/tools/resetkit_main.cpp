// resetkit: command-line front end for reset-word computation, SAT-oracle
// algorithms and the reduction gadgets.
//
// Exit codes: 0 success / YES / PASS, 1 NO / FAIL / not synchronizing,
// 2 usage or parse error, 3 resource budget exceeded, 10 oracle failure.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "resetkit/resetkit.hpp"

namespace {

using namespace resetkit;

constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitOracle = 10;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw InputError("cannot write " + path);
}

Oracle make_oracle(const std::string& solver) {
  if (!solver.empty()) return Oracle::external(solver);
  return Oracle::from_environment();
}

std::optional<State> meta_state(const DfaDocument& doc, const std::string& key) {
  for (const auto& [k, v] : doc.metadata) {
    if (k == key) return static_cast<State>(std::stoul(v));
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronizing automata: reset words, SAT oracles, reductions"};
  app.require_subcommand(1);

  std::size_t budget = kDefaultSubsetBudget;
  app.add_option("--budget", budget, "Maximum number of subsets stored by subset searches");

  std::string dfa_path;
  std::string method;
  std::string solver;
  std::uint64_t length_k = 0;
  bool shortest_flag = false;
  std::string output = "-";

  auto* check = app.add_subcommand("check", "Is the automaton synchronizing?");
  check->add_option("dfa", dfa_path, "Automaton file ('-' for stdin)")->required();

  auto* length = app.add_subcommand("length", "Length of a shortest reset word");
  length->add_option("dfa", dfa_path)->required();
  length->add_option("--method", method)->check(CLI::IsMember({"bfs", "sat"}))->default_str("bfs");
  length->add_option("--sat-solver", solver, "External SAT solver executable");

  auto* solve = app.add_subcommand("solve", "Compute a reset word");
  solve->add_option("dfa", dfa_path)->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"bfs", "sat", "greedy"}))->default_str("bfs");
  solve->add_option("--sat-solver", solver, "External SAT solver executable");

  auto* decide = app.add_subcommand("decide", "Is there a reset word of length K (or is K the shortest)?");
  decide->add_option("dfa", dfa_path)->required();
  decide->add_option("-k", length_k, "Target length")->required();
  decide->add_flag("--shortest", shortest_flag, "Decide whether K is the shortest length");
  decide->add_option("--sat-solver", solver, "External SAT solver executable");

  auto* count = app.add_subcommand("count", "Number of reset words of length K");
  count->add_option("dfa", dfa_path)->required();
  count->add_option("-k", length_k, "Word length")->required();

  auto* reduce = app.add_subcommand("reduce", "Build a reduction gadget");
  reduce->require_subcommand(1);
  std::vector<std::string> cnf_paths;
  State sink_state = 0;
  State special_state = 0;
  auto* red_satunsat = reduce->add_subcommand("satunsat", "SAT-UNSAT pair to SHORTEST-RESET-WORD");
  red_satunsat->add_option("phi", cnf_paths)->required()->expected(2);
  red_satunsat->add_option("-o", output, "Output file ('-' for stdout)");
  auto* red_fsat = reduce->add_subcommand("fsat", "FSAT to reset word of a given length");
  red_fsat->add_option("phi", cnf_paths)->required()->expected(1);
  red_fsat->add_option("-o", output);
  auto* red_maxsat = reduce->add_subcommand("maxsat", "MAX-SAT-SIZE to shortest reset length");
  red_maxsat->add_option("phi", cnf_paths)->required()->expected(1);
  red_maxsat->add_option("-o", output);
  auto* red_binarize = reduce->add_subcommand("binarize", "Three-letter gadget to two letters");
  red_binarize->add_option("dfa", dfa_path)->required();
  red_binarize->add_option("-o", output);
  auto* sink_opt = red_binarize->add_option("--sink", sink_state, "Absorbing state (default: meta sink)");
  auto* special_opt = red_binarize->add_option("--special", special_state, "The state t (default: meta t)");

  auto* verify = app.add_subcommand("verify", "Check a reduction's claims on an instance");
  verify->require_subcommand(1);
  auto* ver_satunsat = verify->add_subcommand("satunsat");
  ver_satunsat->add_option("cnf", cnf_paths)->required()->expected(2);
  auto* ver_fsat = verify->add_subcommand("fsat");
  ver_fsat->add_option("cnf", cnf_paths)->required()->expected(1);
  auto* ver_maxsat = verify->add_subcommand("maxsat");
  ver_maxsat->add_option("cnf", cnf_paths)->required()->expected(1);
  auto* ver_parsimony = verify->add_subcommand("parsimony");
  ver_parsimony->add_option("cnf", cnf_paths)->required()->expected(1);

  auto* gen = app.add_subcommand("gen", "Generate automaton families");
  gen->require_subcommand(1);
  std::size_t gen_n = 0;
  auto* gen_cerny = gen->add_subcommand("cerny", "Cerny automaton C_n");
  gen_cerny->add_option("-n", gen_n, "Number of states (>= 2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    auto load_dfa = [&] { return parse_dfa_document(read_input(dfa_path)); };
    auto load_cnf = [&](std::size_t i) { return parse_dimacs(read_input(cnf_paths.at(i))); };
    auto print_verdict = [](bool yes, const char* y, const char* n) {
      std::cout << (yes ? y : n) << '\n';
      return yes ? 0 : kExitNo;
    };

    if (*check) {
      return print_verdict(is_synchronizing(load_dfa().automaton), "SYNCHRONIZING",
                           "NOT-SYNCHRONIZING");
    }
    if (*length) {
      auto a = load_dfa().automaton;
      if (method == "sat") {
        auto oracle = make_oracle(solver);
        auto result = shortest_length_via_oracle(a, oracle);
        if (!result) {
          std::cout << "NONE\n";
        } else {
          std::cout << result->length << "\nqueries=" << result->queries << '\n';
        }
      } else {
        auto result = shortest_reset_length(a, budget);
        std::cout << (result ? std::to_string(*result) : std::string("NONE")) << '\n';
      }
      return 0;
    }
    if (*solve) {
      auto a = load_dfa().automaton;
      std::optional<Word> word;
      if (method == "sat") {
        auto oracle = make_oracle(solver);
        word = shortest_word_via_oracle(a, oracle);
      } else if (method == "greedy") {
        word = greedy_reset_word(a);
      } else {
        word = shortest_reset_word(a, budget);
      }
      std::cout << (word ? format_word(*word) : std::string("NONE")) << '\n';
      return 0;
    }
    if (*decide) {
      auto a = load_dfa().automaton;
      auto oracle = make_oracle(solver);
      bool yes = shortest_flag ? is_shortest_length(a, length_k, oracle)
                               : has_reset_word_of_length(a, length_k, oracle);
      return print_verdict(yes, "YES", "NO");
    }
    if (*count) {
      auto a = load_dfa().automaton;
      std::cout << count_reset_words(a, static_cast<std::size_t>(length_k), budget).str()
                << '\n';
      return 0;
    }
    if (*reduce) {
      if (*red_satunsat) {
        auto g = build_sat_unsat_gadget(load_cnf(0), load_cnf(1));
        write_output(output, serialize_dfa(g.automaton, g.metadata()));
      } else if (*red_fsat) {
        auto g = build_fsat_gadget(load_cnf(0));
        write_output(output, serialize_dfa(g.automaton, g.metadata()));
      } else if (*red_maxsat) {
        auto g = build_maxsat_gadget(load_cnf(0));
        write_output(output, serialize_dfa(g.automaton, g.metadata()));
      } else if (*red_binarize) {
        auto doc = load_dfa();
        auto s = sink_opt->count() ? std::optional<State>(sink_state) : meta_state(doc, "sink");
        auto t = special_opt->count() ? std::optional<State>(special_state) : meta_state(doc, "t");
        if (!s || !t) throw InputError("binarize needs --sink and --special (or meta sink/t lines)");
        write_output(output, serialize_dfa(binarize(doc.automaton, *s, *t)));
      }
      return 0;
    }
    if (*verify) {
      Report report;
      if (*ver_satunsat) {
        report = verify_sat_unsat(load_cnf(0), load_cnf(1));
      } else if (*ver_fsat) {
        report = verify_fsat(load_cnf(0));
      } else if (*ver_maxsat) {
        report = verify_maxsat(load_cnf(0));
      } else {
        report = verify_parsimony(load_cnf(0));
      }
      std::cout << report.to_string();
      return report.passed() ? 0 : kExitNo;
    }
    if (*gen) {
      std::cout << serialize_dfa(cerny_automaton(gen_n));
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "resetkit: " << e.what() << '\n';
    return kExitBudget;
  } catch (const OracleFailure& e) {
    std::cerr << "resetkit: oracle failure: " << e.what() << '\n';
    return kExitOracle;
  } catch (const OracleInconsistency& e) {
    std::cerr << "resetkit: oracle inconsistency: " << e.what() << '\n';
    return kExitOracle;
  } catch (const Error& e) {
    std::cerr << "resetkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "resetkit: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
