#pragma once

#include <stdexcept>
#include <string>

namespace zc {

enum class ErrorCode {
  invalid_argument,
  domain,
  range,
  no_admissible_r,
  iteration_limit,
  infeasible_interval,
  hypothesis_violation,
  precision,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace zc
