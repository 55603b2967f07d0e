#pragma once

#include <stdexcept>
#include <string>

namespace qgauss {

/// Argument outside the domain of an operation (negative index, k > n, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation of a negative power of q at q = 0.
struct ZeroBaseError : DomainError {
    explicit ZeroBaseError(const std::string& what) : DomainError(what) {}
};

/// Field modulus failed the primality check.
struct NotPrimeError : DomainError {
    explicit NotPrimeError(const std::string& what) : DomainError(what) {}
};

/// A polynomial division that is exact by construction left a remainder.
/// Reaching this indicates a bug, not bad input.
struct InexactDivisionError : std::logic_error {
    explicit InexactDivisionError(const std::string& what) : std::logic_error(what) {}
};

/// A basis expansion that must terminate with a zero residual did not.
struct NonzeroResidualError : std::logic_error {
    explicit NonzeroResidualError(const std::string& what) : std::logic_error(what) {}
};

/// Malformed polynomial text.
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qgauss
