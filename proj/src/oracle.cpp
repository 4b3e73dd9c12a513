#include "resetkit/oracle.hpp"

#include <sys/wait.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "resetkit/error.hpp"

namespace resetkit {

Oracle Oracle::internal(DpllLimits limits) {
  Oracle o;
  o.limits_ = limits;
  return o;
}

Oracle Oracle::external(std::filesystem::path solver) {
  if (solver.empty()) throw InputError("empty SAT solver path");
  Oracle o;
  o.solver_ = std::move(solver);
  return o;
}

Oracle Oracle::from_environment() {
  const char* path = std::getenv(kSolverEnvVar);
  if (path != nullptr && *path != '\0') return external(path);
  return internal();
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') {
      out += "'\\''";
    } else {
      out += ch;
    }
  }
  return out + "'";
}

// Temp file removed on scope exit.
class TempCnfFile {
 public:
  explicit TempCnfFile(const std::string& contents) {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("resetkit-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++) + ".cnf");
    std::ofstream out(path_);
    out << contents;
    if (!out) throw OracleFailure("cannot write " + path_.string());
  }
  ~TempCnfFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempCnfFile(const TempCnfFile&) = delete;
  TempCnfFile& operator=(const TempCnfFile&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

std::optional<Assignment> parse_solver_output(std::string_view output,
                                              int exit_code, int variables) {
  enum class Status { Unknown, Sat, Unsat } status = Status::Unknown;
  Assignment alpha(static_cast<std::size_t>(variables));
  std::vector<bool> seen(static_cast<std::size_t>(variables), false);

  std::istringstream in{std::string(output)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      if (line.find("UNSATISFIABLE") != std::string::npos) {
        status = Status::Unsat;
      } else if (line.find("SATISFIABLE") != std::string::npos) {
        status = Status::Sat;
      } else {
        throw OracleFailure("solver reported '" + line + "'");
      }
    } else if (line.rfind("v ", 0) == 0) {
      std::istringstream tokens(line.substr(2));
      long lit = 0;
      while (tokens >> lit) {
        if (lit == 0) continue;
        auto var = std::labs(lit);
        if (var > variables) throw OracleFailure("solver value out of range");
        alpha.set(static_cast<int>(var), lit > 0);
        seen[static_cast<std::size_t>(var - 1)] = true;
      }
    }
  }

  if (exit_code != 10 && exit_code != 20) {
    throw OracleFailure("solver exited with code " + std::to_string(exit_code));
  }
  if (status == Status::Unknown) {
    status = exit_code == 10 ? Status::Sat : Status::Unsat;
  }
  if ((status == Status::Sat) != (exit_code == 10)) {
    throw OracleFailure("solver exit code " + std::to_string(exit_code) +
                        " contradicts its status line");
  }
  if (status == Status::Unsat) return std::nullopt;
  for (bool s : seen) {
    if (!s) throw OracleFailure("solver omitted values for some variables");
  }
  return alpha;
}

std::optional<Assignment> Oracle::solve(const Cnf& f) {
  ++queries_;
  if (!is_external()) return dpll_solve(f, limits_);

  TempCnfFile file(write_dimacs(f));
  auto command = shell_quote(solver_.string()) + " " +
                 shell_quote(file.path().string()) + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw OracleFailure("cannot start " + solver_.string());
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  int status = ::pclose(pipe);
  if (status == -1 || !WIFEXITED(status)) {
    throw OracleFailure("solver " + solver_.string() + " terminated abnormally");
  }
  int exit_code = WEXITSTATUS(status);
  if (exit_code != 10 && exit_code != 20) {
    throw OracleFailure("solver " + solver_.string() + " exited with code " +
                        std::to_string(exit_code));
  }
  auto result = parse_solver_output(output, exit_code, f.variable_count);
  if (result && !satisfies(f, *result)) {
    throw OracleFailure("solver returned a non-satisfying assignment");
  }
  return result;
}

}  // namespace resetkit
