#include "qgauss/qbinom.hpp"

#include <mutex>
#include <utility>

namespace qgauss {

LaurentPoly q_integer(int n) {
    if (n < 0) {
        throw DomainError("q_integer: negative n");
    }
    LaurentPoly r;
    for (int e = 0; e < n; ++e) {
        r += LaurentPoly::q_power(e);
    }
    return r;
}

LaurentPoly q_factorial(int n) {
    if (n < 0) {
        throw DomainError("q_factorial: negative n");
    }
    LaurentPoly r = LaurentPoly::constant(1);
    for (int i = 2; i <= n; ++i) {
        r *= q_integer(i);
    }
    return r;
}

LaurentPoly q_falling(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("q_falling: need 0 <= k <= n");
    }
    LaurentPoly r = LaurentPoly::constant(1);
    for (int i = 0; i < k; ++i) {
        r *= q_integer(n - i);
    }
    return r;
}

namespace {

std::vector<LaurentPoly> next_row(const std::vector<LaurentPoly>& row) {
    const int n = static_cast<int>(row.size()) - 1;
    std::vector<LaurentPoly> next(row.size() + 1);
    next[0] = LaurentPoly::constant(1);
    for (int k = 1; k <= n + 1; ++k) {
        next[k] = row[k - 1];
        if (k <= n) {
            next[k] += row[k].shifted(k);
        }
    }
    return next;
}

}  // namespace

LaurentPoly qbinom_rec(int n, int k) {
    if (n < 0) {
        throw DomainError("qbinom_rec: negative n");
    }
    if (k < 0 || k > n) {
        return {};
    }
    static std::mutex mu;
    static std::vector<std::vector<LaurentPoly>> rows{{LaurentPoly::constant(1)}};
    std::lock_guard lock(mu);
    while (static_cast<int>(rows.size()) <= n) {
        rows.push_back(next_row(rows.back()));
    }
    return rows[n][k];
}

LaurentPoly qbinom_product(int n, int k) {
    if (n < 0) {
        throw DomainError("qbinom_product: negative n");
    }
    if (k < 0 || k > n) {
        return {};
    }
    return div_exact(q_falling(n, k), q_factorial(k));
}

LaurentPoly qbinom_zero_column(int n, int k) {
    if (n < 0) {
        throw DomainError("qbinom_zero_column: negative n");
    }
    if (k < 0 || k > n) {
        return {};
    }
    std::vector<LaurentPoly> row{LaurentPoly::constant(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<LaurentPoly> next(row.size() + 1);
        next[0] = LaurentPoly();  // the alternate boundary
        for (int j = 1; j <= m; ++j) {
            next[j] = row[j - 1];
            if (j < m) {
                next[j] += row[j].shifted(j);
            }
        }
        row = std::move(next);
    }
    return row[k];
}

QBinomTriangle::QBinomTriangle(std::vector<std::vector<LaurentPoly>> rows)
    : rows_(std::move(rows)) {}

const LaurentPoly& QBinomTriangle::at(int n, int k) const {
    if (n < 0 || n >= rows() || k < 0 || k > n) {
        throw DomainError("QBinomTriangle::at: index out of range");
    }
    return rows_[n][k];
}

LaurentPoly QBinomTriangle::diagonal_sum(int n) const {
    if (n < 0 || n >= rows()) {
        throw DomainError("QBinomTriangle::diagonal_sum: row out of range");
    }
    LaurentPoly sum;
    for (int k = 0; n - k >= k; ++k) {
        sum += rows_[n - k][k];
    }
    return sum;
}

QBinomTriangle build_triangle(int n_max) {
    if (n_max < 0) {
        throw DomainError("build_triangle: negative size");
    }
    std::vector<std::vector<LaurentPoly>> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    rows.push_back({LaurentPoly::constant(1)});
    for (int n = 1; n <= n_max; ++n) {
        rows.push_back(next_row(rows.back()));
    }
    return QBinomTriangle(std::move(rows));
}

std::vector<std::vector<ArbInt>> eval_triangle(int n_max, const ArbInt& q0) {
    if (q0 < 1) {
        throw DomainError("eval_triangle: q must be >= 1");
    }
    const QBinomTriangle tri = build_triangle(n_max);
    std::vector<std::vector<ArbInt>> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<ArbInt> row;
        row.reserve(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            row.push_back(eval_int(tri.at(n, k), q0));
        }
        out.push_back(std::move(row));
    }
    return out;
}

VerificationReport verify_qbinom(int n_max) {
    if (n_max < 0) {
        throw DomainError("verify_qbinom: negative n_max");
    }
    VerificationReport report;
    report.suite = "qbinom";

    std::vector<std::vector<ArbInt>> pascal{{1}};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<ArbInt> row(static_cast<size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k) {
            row[k] = pascal.back()[k - 1] + pascal.back()[k];
        }
        pascal.push_back(std::move(row));
    }

    auto params = [](const char* check, int n, int k) {
        return std::vector<std::pair<std::string, std::string>>{
            {"check", check}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
    };
    // Counterexamples are rendered only on failure; str() on every passing
    // entry would dominate the sweep.
    auto record = [&report](bool ok, auto make_ce) {
        report.record(ok, ok ? Counterexample{} : make_ce());
    };
    for (int n = 0; n <= n_max && report.holds; ++n) {
        for (int k = 0; k <= n && report.holds; ++k) {
            const LaurentPoly rec = qbinom_rec(n, k);
            const LaurentPoly prod = qbinom_product(n, k);
            record(rec == prod, [&] {
                return Counterexample{params("routes", n, k), rec.str(),
                                      prod.str()};
            });

            const ArbInt at1 = eval_int(rec, 1);
            record(at1 == pascal[n][k], [&] {
                return Counterexample{params("pascal", n, k), to_string(at1),
                                      to_string(pascal[n][k])};
            });

            const int d = k * (n - k);
            record(rec.min_exponent() == 0 && rec.degree() == d, [&] {
                return Counterexample{params("support", n, k), rec.str(),
                                      "exponents 0.." + std::to_string(d)};
            });

            bool positive = true;
            bool palindromic = true;
            for (const auto& [exp, coeff] : rec.terms()) {
                positive = positive && coeff > 0;
                palindromic = palindromic && coeff == rec.coeff(d - exp);
            }
            record(positive, [&] {
                return Counterexample{params("positive", n, k), rec.str(),
                                      "positive coefficients"};
            });
            record(palindromic, [&] {
                return Counterexample{params("palindrome", n, k), rec.str(),
                                      "palindromic coefficients"};
            });

            const LaurentPoly mirror = qbinom_rec(n, n - k);
            record(rec == mirror, [&] {
                return Counterexample{params("symmetry", n, k), rec.str(),
                                      mirror.str()};
            });
        }
    }
    return report;
}

}  // namespace qgauss
