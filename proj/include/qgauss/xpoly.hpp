#pragma once

#include <string>
#include <vector>

#include "qgauss/laurent.hpp"

namespace qgauss {

/// Polynomial in x whose coefficients are Laurent polynomials in q. Stored
/// densely by power of x with trailing zero coefficients trimmed; the zero
/// polynomial keeps a single zero entry so the list is never empty.
class XPoly {
public:
    /// The zero polynomial.
    XPoly() : coeffs_(1) {}

    /// Takes coefficients indexed by power of x and trims to canonical form.
    explicit XPoly(std::vector<LaurentPoly> coeffs);

    static XPoly constant(LaurentPoly c);
    /// x^n
    static XPoly x_power(int n);

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    /// Highest stored power of x (0 for the zero polynomial).
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the degree.
    const LaurentPoly& coeff(int i) const;

    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    /// Rendering for reports: "(c0) + (c1)*x + (c2)*x^2 + ...", coefficients
    /// in the canonical Laurent form, zero coefficients skipped.
    std::string str() const;

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    XPoly& operator*=(const XPoly& rhs);

    friend XPoly operator+(XPoly lhs, const XPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend XPoly operator-(XPoly lhs, const XPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend XPoly operator*(const XPoly& lhs, const XPoly& rhs);

    friend bool operator==(const XPoly& lhs, const XPoly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const XPoly& lhs, const XPoly& rhs) { return !(lhs == rhs); }

private:
    void trim();

    std::vector<LaurentPoly> coeffs_;
};

/// Scales every coefficient by the Laurent polynomial s.
XPoly scale(const XPoly& p, const LaurentPoly& s);

}  // namespace qgauss
