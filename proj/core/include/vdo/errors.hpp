#pragma once

#include <stdexcept>
#include <string>

namespace vdo {

// Invalid configuration: malformed search spaces, out-of-range parameters,
// unknown problem or optimizer names.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An evaluation was requested after the budget was spent. Loops treat this
// as the termination signal; it is never a silent overrun.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A data file is missing or does not match the documented shape.
class DataFormatError : public std::runtime_error {
 public:
  explicit DataFormatError(const std::string& what) : std::runtime_error(what) {}
};

// A benchmark function id whose base function this library does not provide.
class UnsupportedFunction : public std::runtime_error {
 public:
  explicit UnsupportedFunction(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure while reading or emitting results.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vdo
