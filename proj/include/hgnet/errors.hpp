#pragma once

#include <stdexcept>
#include <string>

namespace hgnet {

// Input problems: bad shapes, malformed files, invalid configuration.
// Mapped to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric failure states: NaN/Inf produced by a forward op, training
// divergence. Mapped to CLI exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hgnet
