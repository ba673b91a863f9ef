#pragma once

#include <stdexcept>
#include <string>

namespace w1plus {

// Error categories; mirrored by the C API status codes and CLI exit codes.
enum class ErrorCode {
  invalid_argument,  // bad input (graph description, measure, tuple, ...)
  parse_error,       // malformed file or scenario document
  no_convergence,    // iterative solver exhausted its budget
  numerical_failure, // something that should not happen (LP infeasible, cycle in DAG)
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

} // namespace w1plus
