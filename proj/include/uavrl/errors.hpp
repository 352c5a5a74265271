#pragma once

#include <stdexcept>
#include <string>

namespace uavrl {

/// Invalid domain values: bad scenario fields, bad hyperparameters,
/// table shape mismatches, contract violations.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input documents (scenario files, table dumps).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uavrl
