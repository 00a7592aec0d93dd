#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motivic {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// A condition that valid inputs can never trigger; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

/// Product of two formal generators, which the class module does not define.
struct SymbolProductError : Error {
    using Error::Error;
};

/// The difference of the two incidence-class computations does not have the
/// expected shape; some upstream class formula is broken.
struct DerivationMismatchError : Error {
    using Error::Error;
};

/// Inversion of zero in a prime field.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Operands with incompatible dimensions or moduli.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A matrix fails the alternating invariant (zero diagonal, antisymmetry).
struct NotAlternatingError : Error {
    using Error::Error;
};

/// A form does not have the rank the operation requires.
struct RankMismatchError : Error {
    using Error::Error;
};

/// Seeded sampling failed to find an admissible span within the retry bound.
struct GenericityExhaustedError : Error {
    using Error::Error;
};

/// Syntax error in a class expression; `position` is 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position(position) {}
    std::size_t position;
};

}  // namespace motivic
