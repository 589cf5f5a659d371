#pragma once

#include <stdexcept>
#include <string>

namespace spsim {

enum class ErrorCode {
  config = 1,
  dim_mismatch = 2,
  empty_probe = 3,
  degenerate_measurement = 4,
  invalid_target = 5,
  io = 6,
  invalid_argument = 7,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

} // namespace spsim
