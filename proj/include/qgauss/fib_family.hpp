#pragma once

#include <string>
#include <vector>

#include "qgauss/laurent.hpp"
#include "qgauss/report.hpp"

namespace qgauss {

/// Weighting convention for the family sum
///   F(n+1; j) = sum_k C(n-k, k)_q * w(j, k),  F(0; j) = 0.
/// Literal uses w = q^(j*(k-1)), whose k = 0 term carries q^-j; Shifted uses
/// w = q^(j*k) and stays in ordinary polynomials. The two differ by a global
/// factor q^-j per entry and coincide at j = 0.
enum class Convention { Shifted, Literal };

/// Candidate recurrences relating family levels, adjudicated symbolically:
///   Plain:      F(n+2; j) = F(n+1; j+1) + F(n; j)
///   QjTrailing: F(n+2; j) = F(n+1; j+1) + q^j * F(n; j)
///   QLeading:   F(n+2; j) = q * F(n+1; j+1) + F(n; j)
enum class RecurrenceVariant { Plain, QjTrailing, QLeading };

std::string to_string(Convention conv);
std::string to_string(RecurrenceVariant variant);

/// F(n; j) under the given convention. Exact Laurent polynomial; reduces to
/// the Fibonacci number F_n at q = 1 for every j and either convention.
LaurentPoly fib_q(int n, int j, Convention conv);

/// fib_q evaluated at integer q0 >= 1. Integer-valued under Shifted; may be a
/// proper rational under Literal (the q^-j weight at k = 0).
Rational fib_q_eval(int n, int j, const ArbInt& q0, Convention conv);

/// All family values n <= n_max, j <= j_max under one convention.
class FamilyTable {
public:
    FamilyTable(Convention conv, int n_max, int j_max);

    Convention convention() const { return conv_; }
    int n_max() const { return n_max_; }
    int j_max() const { return j_max_; }
    const LaurentPoly& at(int n, int j) const;

private:
    Convention conv_;
    int n_max_;
    int j_max_;
    std::vector<LaurentPoly> entries_;
};

FamilyTable family_table(int n_max, int j_max, Convention conv);

/// Compares both sides of one candidate recurrence as exact polynomials over
/// the grid 0 <= j <= j_max, 0 <= n <= n_max - 2, sweeping j then n ascending
/// (the first counterexample is the lexicographically least (j, n) failure).
/// Requires n_max >= 2.
VerificationReport verify_recurrence(RecurrenceVariant variant, Convention conv, int n_max,
                                     int j_max);

/// One convention's three-variant comparison. `verdict` names the unique
/// variant that holds over the whole grid, or "none"; `decisive` is true when
/// at most one holds and every failing variant carries a counterexample.
struct ConventionAdjudication {
    Convention convention;
    std::vector<VerificationReport> variants;
    std::string verdict;
    bool decisive = false;
};

/// Full three-variants-by-two-conventions comparison plus the q = 1 check
/// that every variant degenerates to the plain Fibonacci recurrence.
struct RecurrenceAdjudication {
    int n_max;
    int j_max;
    std::vector<ConventionAdjudication> conventions;
    VerificationReport q1_degeneracy;

    bool decisive() const;
};

RecurrenceAdjudication adjudicate_recurrences(int n_max, int j_max);

/// Coefficients of x^0..x^order of the level-l generating function
/// sum_n F(n; l) x^n.
struct SeriesTruncation {
    int level = 0;
    int order = 0;
    Convention convention = Convention::Shifted;
    std::vector<LaurentPoly> coeffs;
};

SeriesTruncation series_truncate(int level, int order, Convention conv);

/// Exact match, up to the given order >= 2, between the q = 1 specialization
/// of the level-0 series and the expansion of x / (1 - x - x^2) computed by
/// the integer recurrence a_m = a_(m-1) + a_(m-2), a_0 = 0, a_1 = 1.
VerificationReport q1_series_check(int order);

}  // namespace qgauss
