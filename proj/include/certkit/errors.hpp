#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace certkit {

/// An instance or decomposition violates its type invariants.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
  ValidationError(const std::string& context, const std::vector<std::string>& violations);
};

/// A solver or enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reduction was handed an instance of a kind it does not accept.
class UnsupportedKindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A gadget could not be built and validated.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace certkit
