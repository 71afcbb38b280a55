#pragma once

#include <stdexcept>
#include <string>

namespace gcl {

struct GclError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisibleError : GclError {
    NotDivisibleError() : GclError("NotDivisible") {}
};
struct PoleAtPointError : GclError {
    PoleAtPointError() : GclError("PoleAtPoint") {}
};
struct DenominatorVanishesError : GclError {
    DenominatorVanishesError() : GclError("DenominatorVanishesIdentically") {}
};
struct SingularLeadingMinorError : GclError {
    SingularLeadingMinorError() : GclError("SingularLeadingMinor") {}
};
struct NotPolynomialError : GclError {
    explicit NotPolynomialError(const std::string& what) : GclError("NotPolynomial: " + what) {}
};
struct BDValidationError : GclError {
    explicit BDValidationError(const std::string& axiom) : GclError(axiom), axiom(axiom) {}
    std::string axiom;  // NotBijective | NotIsometry | NotNilpotent
};
struct NotSubtripleError : GclError {
    NotSubtripleError() : GclError("NotSubtriple") {}
};
struct IndexOutOfRunError : GclError {
    IndexOutOfRunError() : GclError("IndexOutOfRun") {}
};
struct InferenceError : GclError {
    InferenceError(const std::string& kind, int dim)
        : GclError(kind + " (solution space dim " + std::to_string(dim) + ")"), kind(kind), dim(dim) {}
    std::string kind;  // NoIntegerSolution | NonUniqueAfterNormalization
    int dim;
};

}  // namespace gcl
