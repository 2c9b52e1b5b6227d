#pragma once

#include <stdexcept>
#include <string>

namespace homothety {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation requires a non-abelian group.
struct AbelianGroupError : Error {
    AbelianGroupError() : Error("group is abelian: all generator pairs commute") {}
};

// The invariant-hull computation needs at least one generator with |ratio| != 1.
struct GroupInsideSnError : Error {
    GroupInsideSnError() : Error("all generators have ratio +-1; use the symmetry-case pipeline") {}
};

struct NotInSnError : Error {
    NotInSnError() : Error("some generator has |ratio| != 1; not a symmetry group") {}
};

struct NoSymmetryGeneratorError : Error {
    NoSymmetryGeneratorError() : Error("no generator with ratio -1") {}
};

// Exact multiplicative classification is only available for rational ratios.
struct NonRationalRatioError : Error {
    explicit NonRationalRatioError(const std::string& detail)
        : Error("non-rational ratio: " + detail) {}
};

struct UnresolvedClosureError : Error {
    explicit UnresolvedClosureError(const std::string& detail)
        : Error("closure classification unresolved: " + detail) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& detail)
        : Error("enumeration budget exceeded: " + detail) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& detail)
        : Error("dimension mismatch: " + detail) {}
};

struct ContextMismatchError : Error {
    ContextMismatchError() : Error("field context mismatch") {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

// Scalar-literal or spec-file grammar violation (CLI exit 64).
struct ParseError : Error {
    using Error::Error;
};

// Well-formed input with inconsistent content (CLI exit 65).
struct SemanticError : Error {
    using Error::Error;
};

}  // namespace homothety
