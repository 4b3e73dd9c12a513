// resetkit-sat: the internal DPLL behind the SAT-competition interface.
// Usage: resetkit-sat <file.cnf>; prints `s SATISFIABLE` plus `v` lines and
// exits 10, or prints `s UNSATISFIABLE` and exits 20.

#include <fstream>
#include <iostream>
#include <sstream>

#include "resetkit/dpll.hpp"
#include "resetkit/error.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: resetkit-sat <file.cnf>\n";
    return 1;
  }
  try {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open " << argv[1] << '\n';
      return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();
    auto f = resetkit::parse_dimacs(text.str());
    auto model = resetkit::dpll_solve(f);
    if (!model) {
      std::cout << "s UNSATISFIABLE\n";
      return 20;
    }
    std::cout << "s SATISFIABLE\nv";
    for (int v = 1; v <= f.variable_count; ++v) {
      std::cout << ' ' << (model->value(v) ? v : -v);
      if (v % 20 == 0 && v != f.variable_count) std::cout << "\nv";
    }
    std::cout << " 0\n";
    return 10;
  } catch (const resetkit::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
