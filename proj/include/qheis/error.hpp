#pragma once

#include <stdexcept>
#include <string>

namespace qheis {

// Base class for everything the kernel can throw on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (expressions, polynomial functions, preset files).
struct ParseError : Error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int column_)
        : Error(std::move(msg)), line(line_), column(column_) {}
};

// Violation of an algebraic precondition: mismatched algebras, tensor
// degree above two, invalid blade indices, and the like.
struct AlgebraError : Error {
    using Error::Error;
};

// Exact-arithmetic domain violations (e.g. inverting hbar).
struct DomainError : Error {
    using Error::Error;
};

// normalize() exhausted its rule-application budget.
struct BudgetError : Error {
    using Error::Error;
};

// A named resource (preset, file) could not be resolved.
struct NotFoundError : Error {
    using Error::Error;
};

}  // namespace qheis
