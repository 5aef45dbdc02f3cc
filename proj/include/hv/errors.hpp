#pragma once

#include <stdexcept>
#include <string>

namespace hv {

// Raised for mathematically undefined requests (0^-1, a + i = 0 in a
// branch that divides by it, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised for inconsistent configuration: invalid parameter combinations,
// kappa lookups outside the declared window, malformed oracles.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by the text/JSON readers.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace hv
