#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankforge {

enum class ErrorKind {
  kSingularMatrix,
  kNotSymmetric,
  kNoConvergence,
  kDisconnectedGraph,
  kZeroGames,
  kOddTeamCount,
  kNeverConnected,
  kNeverNonBipartite,
  kInternalMismatch,
  kRawUndefined,
  kNotIrreducible,
  kParse,
  kInvalidArgument,
};

const char* to_string(ErrorKind kind);

// Every library failure is reported as an Error carrying its kind; the C API
// and the CLI translate the kind into a status / exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorKind::kParse,
              "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Process exit code for a failure of the given kind:
// 2 parse, 3 disconnected graph, 4 convergence, 5 invalid config, 1 internal.
int exit_code_for(ErrorKind kind);

}  // namespace rankforge
