#pragma once

#include <stdexcept>
#include <string>

namespace ccpair {

enum class ErrorCode {
    MismatchedField,
    DivisionByZero,
    SingularBasis,
    LengthMismatch,
    NotConjugate,
    TooLarge,
    InvalidMessage,
    NotRepresentative,
    PhaseMismatch,
    EigenvalueMismatch,
    MixtureMismatch,
    EqualityViolation,
    DomainError,
    BadInput,
};

const char* error_code_name(ErrorCode code);

// Library-wide exception. `code` is stable and machine-readable; the CLI maps
// it into the JSON error object.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace ccpair
