#pragma once

#include <stdexcept>
#include <string>

namespace sbdo {

// Every failure mode the library reports deliberately. Callers that want to
// branch on the reason use kind(); the message carries the witness data.
enum class ErrorKind {
    Arity,
    Algebra,
    NotIdempotent,
    NotOrthogonal,
    SumNotUnit,
    Unsupported,
    InvariantViolation,
    Pairing,
    NotPositiveDefinite,
    NotPluriharmonic,
    NonIntegralExponent,
    NonIntegralWeight,
    SqrtParity,
    Parse,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Arity: return "ArityError";
        case ErrorKind::Algebra: return "AlgebraError";
        case ErrorKind::NotIdempotent: return "NotIdempotent";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::SumNotUnit: return "SumNotUnit";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::Pairing: return "PairingError";
        case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorKind::NotPluriharmonic: return "NotPluriharmonic";
        case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
        case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
        case ErrorKind::SqrtParity: return "SqrtParityError";
        case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sbdo
