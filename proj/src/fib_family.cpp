#include "qgauss/fib_family.hpp"

#include "qgauss/qbinom.hpp"

namespace qgauss {

std::string to_string(Convention conv) {
    return conv == Convention::Shifted ? "shifted" : "literal";
}

std::string to_string(RecurrenceVariant variant) {
    switch (variant) {
        case RecurrenceVariant::Plain:
            return "plain";
        case RecurrenceVariant::QjTrailing:
            return "qj_trailing";
        case RecurrenceVariant::QLeading:
            return "q_leading";
    }
    return "?";
}

LaurentPoly fib_q(int n, int j, Convention conv) {
    if (n < 0 || j < 0) {
        throw DomainError("fib_q: negative index or level");
    }
    if (n == 0) {
        return {};
    }
    const int m = n - 1;
    LaurentPoly sum;
    // Entries vanish past k = m/2, so the sum stops there.
    for (int k = 0; 2 * k <= m; ++k) {
        const int weight = conv == Convention::Literal ? j * (k - 1) : j * k;
        sum += qbinom_rec(m - k, k).shifted(weight);
    }
    return sum;
}

Rational fib_q_eval(int n, int j, const ArbInt& q0, Convention conv) {
    if (q0 < 1) {
        throw DomainError("fib_q_eval: q must be >= 1");
    }
    return fib_q(n, j, conv).eval(Rational(q0));
}

FamilyTable::FamilyTable(Convention conv, int n_max, int j_max)
    : conv_(conv), n_max_(n_max), j_max_(j_max) {
    if (n_max < 0 || j_max < 0) {
        throw DomainError("FamilyTable: negative bounds");
    }
    entries_.reserve(static_cast<size_t>(n_max + 1) * static_cast<size_t>(j_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        for (int j = 0; j <= j_max; ++j) {
            entries_.push_back(fib_q(n, j, conv));
        }
    }
}

const LaurentPoly& FamilyTable::at(int n, int j) const {
    if (n < 0 || n > n_max_ || j < 0 || j > j_max_) {
        throw DomainError("FamilyTable::at: index out of range");
    }
    return entries_[static_cast<size_t>(n) * static_cast<size_t>(j_max_ + 1) +
                    static_cast<size_t>(j)];
}

FamilyTable family_table(int n_max, int j_max, Convention conv) {
    return FamilyTable(conv, n_max, j_max);
}

namespace {

LaurentPoly recurrence_rhs(RecurrenceVariant variant, Convention conv, int n, int j) {
    const LaurentPoly next_level = fib_q(n + 1, j + 1, conv);
    const LaurentPoly same_level = fib_q(n, j, conv);
    switch (variant) {
        case RecurrenceVariant::Plain:
            return next_level + same_level;
        case RecurrenceVariant::QjTrailing:
            return next_level + same_level.shifted(j);
        case RecurrenceVariant::QLeading:
            return next_level.shifted(1) + same_level;
    }
    throw DomainError("recurrence_rhs: bad variant");
}

}  // namespace

VerificationReport verify_recurrence(RecurrenceVariant variant, Convention conv, int n_max,
                                     int j_max) {
    if (n_max < 2 || j_max < 0) {
        throw DomainError("verify_recurrence: need n_max >= 2 and j_max >= 0");
    }
    VerificationReport report{.suite = "recurrence." + to_string(variant) + "." +
                                       to_string(conv)};
    for (int j = 0; j <= j_max; ++j) {
        for (int n = 0; n <= n_max - 2; ++n) {
            const LaurentPoly lhs = fib_q(n + 2, j, conv);
            const LaurentPoly rhs = recurrence_rhs(variant, conv, n, j);
            const bool ok = lhs == rhs;
            // render only on failure: passing sweeps stay cheap
            report.record(
                ok, ok ? Counterexample{}
                       : Counterexample{{{"n", std::to_string(n)},
                                         {"j", std::to_string(j)}},
                                        lhs.str(),
                                        rhs.str()});
        }
    }
    return report;
}

bool RecurrenceAdjudication::decisive() const {
    for (const auto& conv : conventions) {
        if (!conv.decisive) {
            return false;
        }
    }
    return q1_degeneracy.holds;
}

RecurrenceAdjudication adjudicate_recurrences(int n_max, int j_max) {
    constexpr RecurrenceVariant kVariants[] = {RecurrenceVariant::Plain,
                                               RecurrenceVariant::QjTrailing,
                                               RecurrenceVariant::QLeading};
    RecurrenceAdjudication adj{.n_max = n_max, .j_max = j_max};

    for (Convention conv : {Convention::Shifted, Convention::Literal}) {
        ConventionAdjudication ca{.convention = conv};
        int holding = 0;
        bool failures_exhibited = true;
        for (RecurrenceVariant variant : kVariants) {
            VerificationReport r = verify_recurrence(variant, conv, n_max, j_max);
            if (r.holds) {
                ++holding;
                ca.verdict = to_string(variant);
            } else if (!r.first_counterexample) {
                failures_exhibited = false;
            }
            ca.variants.push_back(std::move(r));
        }
        if (holding == 0) {
            ca.verdict = "none";
        }
        ca.decisive = holding <= 1 && failures_exhibited;
        adj.conventions.push_back(std::move(ca));
    }

    // At q = 1 every weight collapses to 1, so each candidate must reduce to
    // the ordinary two-term recurrence regardless of convention.
    VerificationReport& q1 = adj.q1_degeneracy;
    q1.suite = "recurrence.q1_degeneracy";
    const Rational one(1);
    for (Convention conv : {Convention::Shifted, Convention::Literal}) {
        for (RecurrenceVariant variant : kVariants) {
            for (int j = 0; j <= j_max; ++j) {
                for (int n = 0; n <= n_max - 2; ++n) {
                    const Rational lhs = fib_q(n + 2, j, conv).eval(one);
                    const Rational rhs = recurrence_rhs(variant, conv, n, j).eval(one);
                    q1.record(lhs == rhs,
                              {{{"variant", to_string(variant)},
                                {"convention", to_string(conv)},
                                {"n", std::to_string(n)},
                                {"j", std::to_string(j)}},
                               to_string(lhs),
                               to_string(rhs)});
                }
            }
        }
    }
    return adj;
}

SeriesTruncation series_truncate(int level, int order, Convention conv) {
    if (level < 0 || order < 0) {
        throw DomainError("series_truncate: negative level or order");
    }
    SeriesTruncation s{.level = level, .order = order, .convention = conv};
    s.coeffs.reserve(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        s.coeffs.push_back(fib_q(m, level, conv));
    }
    return s;
}

VerificationReport q1_series_check(int order) {
    if (order < 2) {
        throw DomainError("q1_series_check: order must be >= 2");
    }
    VerificationReport report{.suite = "series.q1"};
    const SeriesTruncation s = series_truncate(0, order, Convention::Shifted);
    // Expansion of x / (1 - x - x^2): a_m = a_(m-1) + a_(m-2), a_0 = 0, a_1 = 1.
    ArbInt prev(0);
    ArbInt cur(1);
    const Rational one(1);
    for (int m = 0; m <= order; ++m) {
        ArbInt expected;
        if (m == 0) {
            expected = 0;
        } else if (m == 1) {
            expected = 1;
        } else {
            expected = prev + cur;
            prev = cur;
            cur = expected;
        }
        const Rational got = s.coeffs[static_cast<size_t>(m)].eval(one);
        report.record(got == Rational(expected),
                      {{{"m", std::to_string(m)}}, to_string(got), expected.get_str()});
    }
    return report;
}

}  // namespace qgauss
