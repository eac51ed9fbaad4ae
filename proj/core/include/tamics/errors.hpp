#pragma once

#include <stdexcept>
#include <string>

namespace tamics {

// Bad user input: malformed files, out-of-range parameters, dimension mismatch.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / serialization failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exponential-enumeration guard tripped in the testkit oracles.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tamics
