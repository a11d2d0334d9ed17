#pragma once

#include <stdexcept>
#include <string>

namespace dpero {

// Base class for every recoverable error raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid scalar or network input: out-of-range probability, dangling edge
// endpoint, negative travel time, and the like.
class DomainError : public Error {
public:
  using Error::Error;
};

// A node sequence that is not a simple connected path in the network.
class InvalidPathError : public Error {
public:
  using Error::Error;
};

// No start-to-exit route exists.
class NoEscapeRouteError : public Error {
public:
  using Error::Error;
};

// Inconsistent request: empty exit set, oversized placement, instance too
// large for an exhaustive oracle, and the like.
class ConfigError : public Error {
public:
  using Error::Error;
};

// A violated internal invariant. Seeing this is a bug, not a usage error.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dpero
