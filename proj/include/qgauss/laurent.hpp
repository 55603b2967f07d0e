#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qgauss/arith.hpp"

namespace qgauss {

/// Laurent polynomial in q with exact integer coefficients: a finite map
/// exponent -> coefficient. Exponents may be negative. The stored form is
/// always normalized (no zero coefficients; the zero polynomial is the empty
/// map), so structural equality is semantic equality. Values are immutable
/// once built except through the arithmetic operators, which renormalize.
class LaurentPoly {
public:
    /// The zero polynomial.
    LaurentPoly() = default;

    static LaurentPoly constant(ArbInt c);
    /// c * q^exp
    static LaurentPoly term(ArbInt c, int exp);
    /// q^exp
    static LaurentPoly q_power(int exp);

    /// Parses the canonical rendering produced by str(), e.g. "1 + 2*q + q^2",
    /// "q^-1 + 1", "3 - q". Throws ParseError on malformed input.
    static LaurentPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }

    /// Exponent -> coefficient, ascending exponent, no zero entries.
    const std::map<int, ArbInt>& terms() const { return terms_; }

    /// Coefficient of q^exp (zero when absent).
    ArbInt coeff(int exp) const;

    /// Smallest/largest exponent present. Throws DomainError on the zero
    /// polynomial, which has no terms.
    int min_exponent() const;
    int degree() const;

    /// Multiplication by q^d: every exponent increased by d.
    LaurentPoly shifted(int d) const;

    /// Exact value at q = q0. Throws ZeroBaseError when a negative exponent
    /// meets q0 = 0.
    Rational eval(const Rational& q0) const;

    /// Canonical text rendering: ascending exponents, "c*q^e" terms with q^0
    /// elided to the bare coefficient and q^1 written "q". Unit coefficients
    /// on q-powers drop the "1*". This is the interchange format.
    std::string str() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }
    friend bool operator!=(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return !(lhs == rhs);
    }

private:
    void set(int exp, ArbInt c);

    std::map<int, ArbInt> terms_;
};

/// Exact integer value at q = q0. Throws DomainError when the value is not an
/// integer (possible only with negative exponents).
ArbInt eval_int(const LaurentPoly& p, const ArbInt& q0);

/// Exact quotient a / b; throws InexactDivisionError when b does not divide a
/// and DomainError when b is zero.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qgauss
