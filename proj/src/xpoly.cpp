#include "qgauss/xpoly.hpp"

#include <algorithm>
#include <utility>

namespace qgauss {

XPoly::XPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        coeffs_.resize(1);
    }
    trim();
}

XPoly XPoly::constant(LaurentPoly c) {
    XPoly p;
    p.coeffs_[0] = std::move(c);
    return p;
}

XPoly XPoly::x_power(int n) {
    if (n < 0) {
        throw DomainError("x_power: negative power");
    }
    XPoly p;
    p.coeffs_.assign(static_cast<size_t>(n) + 1, LaurentPoly());
    p.coeffs_.back() = LaurentPoly::constant(1);
    return p;
}

void XPoly::trim() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

const LaurentPoly& XPoly::coeff(int i) const {
    static const LaurentPoly zero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return zero;
    }
    return coeffs_[static_cast<size_t>(i)];
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

XPoly operator*(const XPoly& lhs, const XPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<LaurentPoly> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return XPoly(std::move(out));
}

XPoly& XPoly::operator*=(const XPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

std::string XPoly::str() const {
    if (is_zero()) {
        return "(0)";
    }
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += '(' + coeffs_[i].str() + ')';
        if (i == 1) {
            out += "*x";
        } else if (i > 1) {
            out += "*x^" + std::to_string(i);
        }
    }
    return out;
}

XPoly scale(const XPoly& p, const LaurentPoly& s) {
    std::vector<LaurentPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        out.push_back(c * s);
    }
    return XPoly(std::move(out));
}

}  // namespace qgauss
