#pragma once

#include <stdexcept>
#include <string>

namespace levnum {

/// Square matrix has rank below its dimension; no inverse over GF(2).
struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Pascal submatrix that is expected to be regular turned out singular.
struct RegularityViolation : std::runtime_error {
    explicit RegularityViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// A digit position outside the addressable range was requested.
struct IndexBeyondRange : std::runtime_error {
    explicit IndexBeyondRange(const std::string& msg) : std::runtime_error(msg) {}
};

/// Interval resolution exceeds the precision of the point set; exact
/// counting would not be certified.
struct ResolutionExceedsPrecision : std::runtime_error {
    explicit ResolutionExceedsPrecision(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration would exceed the configured point/digit budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// No clean window disjoint from all exceptional intervals was found.
struct NoWindowFound : std::runtime_error {
    explicit NoWindowFound(const std::string& msg) : std::runtime_error(msg) {}
};

/// A rescaled interval boundary that must be even came out odd.
struct BoundaryParityViolation : std::runtime_error {
    explicit BoundaryParityViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// A block selector vector does not fit into the requested length.
struct SelectorOverflow : std::runtime_error {
    explicit SelectorOverflow(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace levnum
