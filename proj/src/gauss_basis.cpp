#include "qgauss/gauss_basis.hpp"

#include "qgauss/qbinom.hpp"

namespace qgauss {

XPoly phi(int k) {
    if (k < 0) {
        throw DomainError("phi: negative index");
    }
    XPoly p = XPoly::constant(LaurentPoly::constant(1));
    for (int i = 0; i < k; ++i) {
        p *= XPoly({-LaurentPoly::q_power(i), LaurentPoly::constant(1)});
    }
    return p;
}

std::vector<LaurentPoly> expand_monomial(int n) {
    if (n < 0) {
        throw DomainError("expand_monomial: negative power");
    }
    std::vector<LaurentPoly> coeffs(static_cast<size_t>(n) + 1);
    XPoly residual = XPoly::x_power(n);
    // phi_k is monic of degree k, so the top coefficient of the residual is
    // the next basis coefficient verbatim.
    for (int k = n; k >= 0; --k) {
        const LaurentPoly c = residual.coeff(k);
        coeffs[static_cast<size_t>(k)] = c;
        if (!c.is_zero()) {
            residual -= scale(phi(k), c);
        }
    }
    if (!residual.is_zero()) {
        throw NonzeroResidualError("expand_monomial: residual " + residual.str());
    }
    return coeffs;
}

XPoly reconstruct(const std::vector<LaurentPoly>& coeffs) {
    XPoly sum;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        sum += scale(phi(static_cast<int>(k)), coeffs[k]);
    }
    return sum;
}

VerificationReport check_dual_recurrence(int k_max) {
    if (k_max < 0) {
        throw DomainError("check_dual_recurrence: negative bound");
    }
    VerificationReport report{.suite = "basis.dual_recurrence"};
    const XPoly x = XPoly::x_power(1);
    for (int k = 0; k <= k_max; ++k) {
        const XPoly basis_k = phi(k);
        const XPoly lhs = x * basis_k;
        const XPoly rhs = scale(basis_k, LaurentPoly::q_power(k)) + phi(k + 1);
        report.record(lhs == rhs, {{{"k", std::to_string(k)}}, lhs.str(), rhs.str()});
    }
    return report;
}

VerificationReport verify_expansion(int n_max) {
    if (n_max < 0) {
        throw DomainError("verify_expansion: negative bound");
    }
    VerificationReport report{.suite = "basis.expansion"};
    for (int n = 0; n <= n_max; ++n) {
        const std::vector<LaurentPoly> coeffs = expand_monomial(n);
        for (int k = 0; k <= n; ++k) {
            const LaurentPoly& lhs = coeffs[static_cast<size_t>(k)];
            const LaurentPoly rhs = qbinom_rec(n, k);
            report.record(lhs == rhs,
                          {{{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                           lhs.str(),
                           rhs.str()});
        }
    }
    return report;
}

}  // namespace qgauss
