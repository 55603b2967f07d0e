#pragma once

#include <vector>

#include "qgauss/report.hpp"
#include "qgauss/xpoly.hpp"

namespace qgauss {

/// phi_k(x) = (x - 1)(x - q)(x - q^2)...(x - q^(k-1)), monic of degree k;
/// phi_0 = 1.
XPoly phi(int k);

/// Coefficients c_0..c_n expressing x^n in the phi basis, obtained by peeling
/// the monic basis polynomials from the top degree down. The residual after
/// the last subtraction must vanish; a leftover raises NonzeroResidualError.
std::vector<LaurentPoly> expand_monomial(int n);

/// sum_k coeffs[k] * phi(k); inverse of expand_monomial when coeffs came
/// from it.
XPoly reconstruct(const std::vector<LaurentPoly>& coeffs);

/// Checks x * phi_k = q^k phi_k + phi_(k+1) exactly for 0 <= k <= k_max.
VerificationReport check_dual_recurrence(int k_max);

/// Checks expand_monomial(n)[k] == qbinom_rec(n, k) for all k <= n <= n_max.
VerificationReport verify_expansion(int n_max);

}  // namespace qgauss
