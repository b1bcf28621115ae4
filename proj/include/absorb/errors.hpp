#ifndef ABSORB_ERRORS_HPP
#define ABSORB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace absorb {

// Precondition on an argument was violated (symbol range, length, parameter).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An absorption pattern does not satisfy the event spacing or length rules.
struct InvalidPattern : DomainError {
    using DomainError::DomainError;
};

// The received word is not consistent with any codeword of the code.
struct DecodeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured enumeration cap would be exceeded.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guarantee that construction should make impossible did not hold.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace absorb

#endif
