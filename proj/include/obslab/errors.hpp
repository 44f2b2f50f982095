#pragma once

#include <stdexcept>
#include <string>

namespace obslab {

/// Argument outside the documented domain of an operation.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A hypothesis of the estimate is violated (e.g. time horizon below threshold).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw InvalidArgument(message);
}

}  // namespace obslab
