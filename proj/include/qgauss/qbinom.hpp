#pragma once

#include <vector>

#include "qgauss/laurent.hpp"
#include "qgauss/report.hpp"

namespace qgauss {

/// n_q = 1 + q + ... + q^(n-1); zero for n = 0.
LaurentPoly q_integer(int n);

/// n_q! = 1_q * 2_q * ... * n_q with 0_q! = 1_q! = 1.
LaurentPoly q_factorial(int n);

/// Falling factorial n_q (n-1)_q ... (n-k+1)_q; the empty product (k = 0)
/// is 1. Throws DomainError unless 0 <= k <= n.
LaurentPoly q_falling(int n, int k);

/// Gaussian binomial coefficient by the recurrence
///   C(n+1, k) = C(n, k-1) + q^k C(n, k),  C(n, 0) = 1,
/// total in k: zero outside 0 <= k <= n. Rows are memoized process-wide
/// behind a mutex, so concurrent callers see a pure function.
LaurentPoly qbinom_rec(int n, int k);

/// Same coefficient through the independent product route,
/// falling(n, k) / k_q!, as one exact polynomial division. The two routes
/// agreeing is a checked property, not an assumption.
LaurentPoly qbinom_product(int n, int k);

/// Recurrence variant with the column-zero boundary C(n, 0) = 0 for n > 0
/// (and C(0,0) = 1). Kept so tests can show the monomial expansion breaks
/// under it; not used by anything else.
LaurentPoly qbinom_zero_column(int n, int k);

/// Rows 0..n of Gaussian binomials. Row n holds entries k = 0..n.
class QBinomTriangle {
public:
    explicit QBinomTriangle(std::vector<std::vector<LaurentPoly>> rows);

    /// Number of rows (apex-only triangle has 1).
    int rows() const { return static_cast<int>(rows_.size()); }
    const LaurentPoly& at(int n, int k) const;
    const std::vector<std::vector<LaurentPoly>>& data() const { return rows_; }

    /// sum_k entry(n-k, k): the shallow-diagonal sum through row n.
    LaurentPoly diagonal_sum(int n) const;

private:
    std::vector<std::vector<LaurentPoly>> rows_;
};

/// Triangle with rows 0..n_max filled through the recurrence.
QBinomTriangle build_triangle(int n_max);

/// Entrywise integer evaluation of the triangle at q = q0 >= 1.
std::vector<std::vector<ArbInt>> eval_triangle(int n_max, const ArbInt& q0);

/// Full property sweep over k <= n <= n_max: the recurrence and product
/// routes agree, q = 1 collapses to Pascal, and every coefficient has the
/// expected shape (supported on 0..k(n-k), positive, palindromic, symmetric
/// under k -> n-k). Counterexample parameters name the failing check.
VerificationReport verify_qbinom(int n_max);

}  // namespace qgauss
