#pragma once

#include <stdexcept>
#include <string>

namespace starrad {

/// Argument outside the domain of a closed-form expression (e.g. r >= 1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller violated a documented precondition (bad alpha, n too small, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No sign change of the polynomial was found on the scanned interval.
class NoRootInInterval : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnsupportedRegion : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Herglotz specs handed to a class constructor have the wrong count or order.
class SpecMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace starrad
