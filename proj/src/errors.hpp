#pragma once

#include <stdexcept>
#include <string>

namespace mhd {

// codes mirror the C API: 1 internal, 2 invalid input, 3 regularity
struct Error : std::runtime_error {
  int code;
  Error(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(2, msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(2, msg) {}
};

// raised when window widening never stabilizes
struct RegularityError : Error {
  explicit RegularityError(const std::string& msg) : Error(3, msg) {}
};

}  // namespace mhd
