#pragma once

#include <stdexcept>
#include <string>

namespace mcover {

// Process exit codes shared by the CLI and the error hierarchy below.
enum class ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kResourceError = 3,
  kAnomaly = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

// Malformed input, parameter out of range, or a violated API precondition.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(ExitCode::kInputError, what) {}
};

// A caller broke an operation's contract (e.g. eliminating a color that
// still has essential edges).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what)
      : Error(ExitCode::kInputError, what) {}
};

// A configured limit or budget would be exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ExitCode::kResourceError, what) {}
};

// A proof step failed at runtime. Carries the full trace as text.
class AnomalyError : public Error {
 public:
  AnomalyError(const std::string& what, std::string trace)
      : Error(ExitCode::kAnomaly, what), trace_(std::move(trace)) {}
  const std::string& trace() const noexcept { return trace_; }

 private:
  std::string trace_;
};

}  // namespace mcover
