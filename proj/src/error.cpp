#include "fewnomial/error.hpp"

namespace fewnomial {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::TermBudgetExceeded: return "TermBudgetExceeded";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotAPowerSubstitution: return "NotAPowerSubstitution";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorKind::DenseCapExceeded: return "DenseCapExceeded";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::SigmaZero: return "SigmaZero";
    case ErrorKind::ConstantTail: return "ConstantTail";
    case ErrorKind::SweepCapExceeded: return "SweepCapExceeded";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace fewnomial
