#pragma once

#include <stdexcept>
#include <string>

namespace ncqm {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct UnboundSymbol : Error {
    using Error::Error;
};

/// Thrown by reciprocal() when no single term dominates under the grading.
struct NotPerturbativelyInvertible : Error {
    using Error::Error;
};

/// Thrown by perturbative_sqrt() when the dominant term is not a perfect square.
struct NotPerfectSquareLeading : Error {
    using Error::Error;
};

struct NotLinearInField : Error {
    using Error::Error;
};

struct NonQuadratic : Error {
    using Error::Error;
};

struct CoordinateDependentMass : Error {
    using Error::Error;
};

struct NotInLadderSpan : Error {
    using Error::Error;
};

struct CanonicalMatchFailed : Error {
    using Error::Error;
};

struct ConditionsViolated : Error {
    using Error::Error;
};

struct UnsupportedField : Error {
    using Error::Error;
};

struct NonLinearField : Error {
    using Error::Error;
};

struct ContourIntersectsBoundary : Error {
    using Error::Error;
};

struct UnknownSymbol : Error {
    using Error::Error;
};

struct NonPolynomialCoordinateUse : Error {
    using Error::Error;
};

/// Field-DSL syntax error carrying source position (1-based).
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int col_)
        : Error(what + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_),
          column(col_) {}
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ncqm
