#pragma once

#include <stdexcept>
#include <string>

namespace icnof {

// Interference below the noise floor (INR <= 1); the regions are not defined there.
class InterferenceTooWeak : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A parameter outside the domain of a rate-region function (e.g. rho > rho_max).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed user input (bad JSON, mixed units, missing field).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A sweep or oracle found a property violation; what() lists the offending inputs.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EquivalenceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace icnof
