#ifndef FEWNOMIAL_ERROR_HPP
#define FEWNOMIAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fewnomial {

// Every domain error carries a stable machine-readable kind name; the CLI
// surfaces it verbatim and maps it to exit code 1.
enum class ErrorKind {
    ZeroPolynomial,
    NotAUnit,
    TermBudgetExceeded,
    DegreeCapExceeded,
    NegativeExponent,
    LengthMismatch,
    DivisionByZero,
    BadPrime,
    CapExceeded,
    NotMonic,
    NotAPowerSubstitution,
    ZeroDenominator,
    SearchCapExceeded,
    DenseCapExceeded,
    ZeroFunction,
    LinearlyDependent,
    SigmaZero,
    ConstantTail,
    SweepCapExceeded,
    UnsupportedShape,
    ConstantInput,
    VerificationFailed,
    ParseError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* kind_name() const { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace fewnomial

#endif
