#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heptax {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Raised when values of different scalar modes meet at a runtime boundary
/// (e.g. a float64 system verified against a rational solution file).
class ModeMismatch : public Error {
public:
    using Error::Error;
};

/// A pivot became zero while factorizing in float64 mode. The symbolic
/// substitution that repairs this is only available in exact arithmetic,
/// so the caller has to rerun in symbolic mode.
class BreakdownInFloatMode : public Error {
public:
    explicit BreakdownInFloatMode(std::size_t row)
        : Error("zero pivot at row " + std::to_string(row + 1) +
                " in float64 mode; rerun with symbolic scalars"),
          row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// A symbolic value has no finite limit at t = 0.
class PoleAtZero : public Error {
public:
    PoleAtZero() : Error("value has a pole at t = 0") {}
    explicit PoleAtZero(const std::string& what) : Error(what) {}
};

/// The symbolic degree ceiling was exceeded; guards against runaway inputs.
class DegreeOverflow : public Error {
public:
    explicit DegreeOverflow(int degree, int cap)
        : Error("symbolic degree " + std::to_string(degree) +
                " exceeds ceiling " + std::to_string(cap)) {}
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class BadBandLength : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OrderTooSmall : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A cyclic band value sits in a slot the bordered structure cannot carry
/// (third sub-diagonal of rows 1..3, third super-diagonal of rows n-2..n).
class BadBandStructure : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("The matrix H_h is singular") {}
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

/// The 2x2 corner block of the bordered form is singular; the reduction
/// is inapplicable even though the full matrix may be invertible.
class SingularCornerBlock : public Error {
public:
    SingularCornerBlock()
        : Error("corner block M2 is singular; the bordered reduction is inapplicable") {}
};

/// The 2x2 capacitance matrix is singular, i.e. the full cyclic matrix is
/// singular (given a nonsingular leading block).
class SingularCapacitance : public SingularMatrix {
public:
    SingularCapacitance() : SingularMatrix() {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

/// Internal control-flow signal: a zero pivot in exact rational mode asks the
/// solve driver to rerun the computation with symbolic scalars. Never escapes
/// the public solve entry points.
struct PivotBreakdown {
    std::size_t row;
};

}  // namespace heptax
