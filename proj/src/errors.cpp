#include "ccpair/errors.hpp"

namespace ccpair {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MismatchedField: return "MismatchedField";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::SingularBasis: return "SingularBasis";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotConjugate: return "NotConjugate";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidMessage: return "InvalidMessage";
        case ErrorCode::NotRepresentative: return "NotRepresentative";
        case ErrorCode::PhaseMismatch: return "PhaseMismatch";
        case ErrorCode::EigenvalueMismatch: return "EigenvalueMismatch";
        case ErrorCode::MixtureMismatch: return "MixtureMismatch";
        case ErrorCode::EqualityViolation: return "EqualityViolation";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "UnknownError";
}

} // namespace ccpair
