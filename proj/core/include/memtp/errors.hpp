#pragma once

#include <stdexcept>

namespace memtp {

/// Thrown when arguments violate a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a request exceeds a hard size limit (e.g. d! enumeration).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace memtp
