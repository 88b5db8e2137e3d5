#pragma once

#include <stdexcept>
#include <string>

namespace fuscat {

/// Raised when the caller violates an operation's precondition
/// (bad input, a theorem hypothesis that does not hold, a cap exceeded).
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check fails. Always indicates a bug.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fuscat
