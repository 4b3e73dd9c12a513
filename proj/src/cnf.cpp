#include "resetkit/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "resetkit/error.hpp"

namespace resetkit {

void Cnf::validate(bool allow_empty_clause) const {
  if (variable_count < 0) throw InputError("negative variable count");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].empty() && !allow_empty_clause) {
      throw InputError("clause " + std::to_string(i + 1) + " is empty");
    }
    for (auto lit : clauses[i]) {
      if (lit == 0 || std::abs(lit) > variable_count) {
        throw InputError("literal " + std::to_string(lit) + " in clause " +
                         std::to_string(i + 1) + " out of range");
      }
    }
  }
}

bool satisfies(const Cnf& f, const Assignment& alpha) {
  return count_satisfied(f, alpha) == f.clauses.size();
}

std::size_t count_satisfied(const Cnf& f, const Assignment& alpha) {
  std::size_t count = 0;
  for (const auto& clause : f.clauses) {
    for (auto lit : clause) {
      if (alpha.satisfies(lit)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

Cnf parse_dimacs(std::string_view text) {
  Cnf f;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Clause current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    std::istringstream in(line);
    std::string first;
    if (!(in >> first)) continue;
    if (first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      long vars = -1;
      long count = -1;
      if (have_header || !(in >> kind >> vars >> count) || kind != "cnf" ||
          vars < 0 || count < 0) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                         "expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      f.variable_count = static_cast<int>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      continue;
    }
    if (!have_header) {
      throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                       "clause before 'p cnf' header");
    }
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      char* end = nullptr;
      long lit = std::strtol(token.c_str(), &end, 10);
      if (end == token.c_str() || *end != '\0') {
        throw ParseError(ParseErrorKind::MalformedLine, line_no,
                         "bad literal '" + token + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(lit) > f.variable_count) {
        throw ParseError(ParseErrorKind::IndexOutOfRange, line_no,
                         "literal " + token + " exceeds declared variables");
      }
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) {
    throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                     "missing 'p cnf' header");
  }
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (f.clauses.size() != declared_clauses) {
    throw ParseError(ParseErrorKind::IncompleteTable, line_no,
                     "header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

std::string write_dimacs(const Cnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (auto lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace resetkit
