#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "qgauss/errors.hpp"
#include "qgauss/fib_family.hpp"
#include "qgauss/gauss_basis.hpp"
#include "qgauss/gf_oracle.hpp"
#include "qgauss/qbinom.hpp"

using nlohmann::ordered_json;
using qgauss::ArbInt;
using qgauss::Convention;
using qgauss::LaurentPoly;
using qgauss::Rational;

namespace {

// Integers ride as JSON numbers while they fit int64, as decimal strings
// beyond that; rationals with denominator 1 follow the integer rule, the
// rest ride as "num/den" strings.
ordered_json json_int(const ArbInt& v) {
    if (v.fits_slong_p()) {
        return static_cast<long long>(v.get_si());
    }
    return qgauss::to_string(v);
}

ordered_json json_rat(const Rational& v) {
    if (v.get_den() == 1) {
        return json_int(ArbInt(v.get_num()));
    }
    return qgauss::to_string(v);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

Convention parse_convention(const std::string& name) {
    return name == "literal" ? Convention::Literal : Convention::Shifted;
}

struct SequenceValues {
    bool symbolic = false;
    std::vector<LaurentPoly> polys;      // symbolic route
    std::vector<Rational> values;        // evaluated route
};

// Shared rendering for fib and series: both export sequences of family
// members, symbolic or evaluated at q.
int print_sequence(const SequenceValues& seq, long q, bool has_q, int j,
                   Convention conv, const std::string& format) {
    if (conv == Convention::Literal) {
        bool negative_exponents = false;
        for (const auto& p : seq.polys) {
            negative_exponents |= !p.is_zero() && p.min_exponent() < 0;
        }
        bool fractional = false;
        for (const auto& v : seq.values) {
            fractional |= v.get_den() != 1;
        }
        if (negative_exponents) {
            std::cerr << "warning: literal convention produced negative "
                         "q-exponents\n";
        }
        if (fractional) {
            std::cerr << "warning: literal convention produced non-integer "
                         "values\n";
        }
    }

    std::vector<std::string> rendered;
    if (seq.symbolic) {
        for (const auto& p : seq.polys) {
            rendered.push_back(p.str());
        }
    } else {
        for (const auto& v : seq.values) {
            rendered.push_back(qgauss::to_string(v));
        }
    }

    if (format == "pretty") {
        std::cout << join(rendered, seq.symbolic ? ", " : " ") << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (size_t n = 0; n < rendered.size(); ++n) {
            std::cout << n << "," << rendered[n] << "\n";
        }
    } else {
        ordered_json out;
        if (has_q) {
            out["q"] = q;
        } else {
            out["q"] = "symbolic";
        }
        out["j"] = j;
        out["convention"] = qgauss::to_string(conv);
        ordered_json values = ordered_json::array();
        if (seq.symbolic) {
            for (const auto& s : rendered) {
                values.push_back(s);
            }
        } else {
            for (const auto& v : seq.values) {
                values.push_back(json_rat(v));
            }
        }
        out["values"] = std::move(values);
        print_json(out);
    }
    return 0;
}

int run_qbinom(int n, int k, long q, bool has_q, const std::string& format) {
    if (k < 0 || k > n) {
        std::cerr << "error: need 0 <= k <= n\n";
        return 2;
    }
    const LaurentPoly c = qgauss::qbinom_rec(n, k);
    const std::string value =
        has_q ? qgauss::to_string(c.eval(Rational(q))) : c.str();
    if (format == "pretty") {
        std::cout << value << "\n";
    } else if (format == "csv") {
        std::cout << "n,k,value\n" << n << "," << k << "," << value << "\n";
    } else {
        ordered_json out;
        if (has_q) {
            out["q"] = q;
        } else {
            out["q"] = "symbolic";
        }
        out["n"] = n;
        out["k"] = k;
        out["value"] = has_q ? json_rat(c.eval(Rational(q))) : ordered_json(value);
        print_json(out);
    }
    return 0;
}

int run_triangle(int rows, long q, bool has_q, bool sums,
                 const std::string& format) {
    const qgauss::QBinomTriangle tri = qgauss::build_triangle(rows);

    std::vector<std::vector<std::string>> entries(static_cast<size_t>(rows) + 1);
    std::vector<std::vector<ArbInt>> evaluated;
    if (has_q) {
        evaluated = qgauss::eval_triangle(rows, ArbInt(q));
    }
    for (int n = 0; n <= rows; ++n) {
        for (int k = 0; k <= n; ++k) {
            entries[n].push_back(has_q ? qgauss::to_string(evaluated[n][k])
                                       : tri.at(n, k).str());
        }
    }

    std::vector<std::string> sum_strings;
    std::vector<ArbInt> sum_values;
    if (sums) {
        for (int n = 0; n <= rows; ++n) {
            const LaurentPoly s = tri.diagonal_sum(n);
            if (has_q) {
                sum_values.push_back(qgauss::eval_int(s, ArbInt(q)));
                sum_strings.push_back(qgauss::to_string(sum_values.back()));
            } else {
                sum_strings.push_back(s.str());
            }
        }
    }

    if (format == "pretty") {
        std::vector<std::string> lines;
        size_t width = 0;
        for (const auto& row : entries) {
            lines.push_back(join(row, " "));
            width = std::max(width, lines.back().size());
        }
        for (const auto& line : lines) {
            std::cout << std::string((width - line.size()) / 2, ' ') << line
                      << "\n";
        }
        if (sums) {
            std::cout << "diagonal sums: " << join(sum_strings, " ") << "\n";
        }
    } else if (format == "csv") {
        for (const auto& row : entries) {
            std::cout << join(row, ",") << "\n";
        }
        if (sums) {
            std::cout << join(sum_strings, ",") << "\n";
        }
    } else {
        ordered_json out;
        if (has_q) {
            out["q"] = q;
        } else {
            out["q"] = "symbolic";
        }
        ordered_json jrows = ordered_json::array();
        for (int n = 0; n <= rows; ++n) {
            ordered_json jrow = ordered_json::array();
            for (int k = 0; k <= n; ++k) {
                jrow.push_back(has_q ? json_int(evaluated[n][k])
                                     : ordered_json(entries[n][k]));
            }
            jrows.push_back(std::move(jrow));
        }
        out["rows"] = std::move(jrows);
        if (sums) {
            ordered_json jsums = ordered_json::array();
            for (int n = 0; n <= rows; ++n) {
                jsums.push_back(has_q ? json_int(sum_values[n])
                                      : ordered_json(sum_strings[n]));
            }
            out["diagonal_sums"] = std::move(jsums);
        }
        print_json(out);
    }
    return 0;
}

int run_fib(int count, long q, bool has_q, int j, Convention conv,
            const std::string& format) {
    SequenceValues seq;
    seq.symbolic = !has_q;
    for (int n = 0; n < count; ++n) {
        if (has_q) {
            seq.values.push_back(qgauss::fib_q_eval(n, j, ArbInt(q), conv));
        } else {
            seq.polys.push_back(qgauss::fib_q(n, j, conv));
        }
    }
    return print_sequence(seq, q, has_q, j, conv, format);
}

int run_series(int level, int order, long q, bool has_q, Convention conv,
               const std::string& format) {
    const qgauss::SeriesTruncation st =
        qgauss::series_truncate(level, order, conv);
    SequenceValues seq;
    seq.symbolic = !has_q;
    for (const auto& coeff : st.coeffs) {
        if (has_q) {
            seq.values.push_back(coeff.eval(Rational(q)));
        } else {
            seq.polys.push_back(coeff);
        }
    }
    return print_sequence(seq, q, has_q, level, conv, format);
}

ordered_json report_json(const qgauss::VerificationReport& r) {
    return ordered_json::parse(r.to_json());
}

ordered_json adjudication_json(const qgauss::RecurrenceAdjudication& adj) {
    ordered_json out;
    out["suite"] = "recurrence";
    out["n_max"] = adj.n_max;
    out["j_max"] = adj.j_max;
    ordered_json convs = ordered_json::array();
    for (const auto& c : adj.conventions) {
        ordered_json jc;
        jc["convention"] = qgauss::to_string(c.convention);
        jc["verdict"] = c.verdict;
        jc["decisive"] = c.decisive;
        ordered_json variants = ordered_json::array();
        for (const auto& r : c.variants) {
            variants.push_back(report_json(r));
        }
        jc["variants"] = std::move(variants);
        convs.push_back(std::move(jc));
    }
    out["conventions"] = std::move(convs);
    out["q1_degeneracy"] = report_json(adj.q1_degeneracy);
    out["decisive"] = adj.decisive();
    out["holds"] = adj.decisive() && adj.q1_degeneracy.holds;
    return out;
}

struct VerifyBounds {
    int qbinom_nmax = 30;
    int basis_kmax = 12;
    int basis_nmax = 12;
    int rec_nmax = 20;
    int rec_jmax = 5;
    int gf_nmax = 4;
    std::vector<int> gf_primes = {2, 3};
    int series_order = 30;
};

int run_verify(const std::string& suite, const VerifyBounds& b) {
    bool ok = true;
    if (suite == "qbinom") {
        auto r = qgauss::verify_qbinom(b.qbinom_nmax);
        ok = r.holds;
        print_json(report_json(r));
    } else if (suite == "basis") {
        auto dual = qgauss::check_dual_recurrence(b.basis_kmax);
        auto expansion = qgauss::verify_expansion(b.basis_nmax);
        ok = dual.holds && expansion.holds;
        print_json(ordered_json::array({report_json(dual), report_json(expansion)}));
    } else if (suite == "recurrence") {
        auto adj = qgauss::adjudicate_recurrences(b.rec_nmax, b.rec_jmax);
        ok = adj.decisive() && adj.q1_degeneracy.holds;
        print_json(adjudication_json(adj));
    } else if (suite == "gf") {
        auto r = qgauss::verify_gf_counts(b.gf_nmax, b.gf_primes);
        ok = r.holds;
        print_json(report_json(r));
    } else if (suite == "series") {
        auto r = qgauss::q1_series_check(b.series_order);
        ok = r.holds;
        print_json(report_json(r));
    } else {  // all
        ordered_json out = ordered_json::array();
        auto qb = qgauss::verify_qbinom(b.qbinom_nmax);
        auto dual = qgauss::check_dual_recurrence(b.basis_kmax);
        auto expansion = qgauss::verify_expansion(b.basis_nmax);
        auto adj = qgauss::adjudicate_recurrences(b.rec_nmax, b.rec_jmax);
        auto gf = qgauss::verify_gf_counts(b.gf_nmax, b.gf_primes);
        auto series = qgauss::q1_series_check(b.series_order);
        ok = qb.holds && dual.holds && expansion.holds && adj.decisive() &&
             adj.q1_degeneracy.holds && gf.holds && series.holds;
        out.push_back(report_json(qb));
        out.push_back(report_json(dual));
        out.push_back(report_json(expansion));
        out.push_back(adjudication_json(adj));
        out.push_back(report_json(gf));
        out.push_back(report_json(series));
        print_json(out);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact q-combinatorics: Gaussian binomial triangles, the Fibonacci "
        "q-Gauss family, the Gaussian polynomial basis, and machine "
        "verification of their identities."};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"pretty", "csv", "json"});
    const auto convention_check = CLI::IsMember({"shifted", "literal"});

    int n = 0, k = 0;
    long q = 0;
    std::string format = "pretty";
    std::string convention = "shifted";

    auto* sub_qbinom = app.add_subcommand(
        "qbinom", "One Gaussian binomial coefficient, symbolic or at integer q");
    sub_qbinom->add_option("n", n, "Row index (n >= 0)")
        ->required()
        ->check(CLI::Range(0, 300));
    sub_qbinom->add_option("k", k, "Column index (0 <= k <= n)")->required();
    auto* qbinom_q =
        sub_qbinom->add_option("--q", q, "Evaluate exactly at this integer");
    sub_qbinom->add_option("--format", format, "pretty|csv|json")
        ->check(format_check);

    int rows = 0;
    bool diagonal_sums = false;
    auto* sub_triangle = app.add_subcommand(
        "triangle", "Gaussian binomial triangle rows 0..N, optionally with the "
                    "shallow-diagonal sums");
    sub_triangle->add_option("--rows", rows, "Last row index N")
        ->required()
        ->check(CLI::Range(0, 300));
    auto* triangle_q = sub_triangle->add_option(
        "--q", q, "Evaluate entries exactly at this integer (q >= 1)");
    sub_triangle->add_flag("--diagonal-sums", diagonal_sums,
                           "Append sum_k binom(n-k, k) for each n");
    sub_triangle->add_option("--format", format, "pretty|csv|json")
        ->check(format_check);

    int count = 0, level = 0;
    auto* sub_fib = app.add_subcommand(
        "fib", "Family sequence F_0..F_(count-1) at level j");
    sub_fib->add_option("--count", count, "How many values")
        ->required()
        ->check(CLI::Range(1, 300));
    auto* fib_q_opt = sub_fib->add_option(
        "--q", q, "Evaluate exactly at this integer (q >= 1)");
    sub_fib->add_option("--j", level, "Level (weight exponent)")
        ->check(CLI::Range(0, 64));
    sub_fib->add_option("--convention", convention,
                        "shifted|literal weight convention")
        ->check(convention_check);
    sub_fib->add_option("--format", format, "pretty|csv|json")
        ->check(format_check);

    int order = 0;
    auto* sub_series = app.add_subcommand(
        "series", "Coefficients of x^0..x^order of the level-l generating "
                  "function");
    sub_series->add_option("--l", level, "Level")->check(CLI::Range(0, 64));
    sub_series->add_option("--order", order, "Truncation order")
        ->required()
        ->check(CLI::Range(0, 300));
    auto* series_q = sub_series->add_option(
        "--q", q, "Evaluate exactly at this integer (q >= 1)");
    sub_series->add_option("--convention", convention,
                           "shifted|literal weight convention")
        ->check(convention_check);
    sub_series->add_option("--format", format, "pretty|csv|json")
        ->check(format_check);

    std::string suite;
    VerifyBounds bounds;
    auto* sub_verify = app.add_subcommand(
        "verify", "Machine-check identity suites; prints a JSON report and "
                  "exits 0 only if every asserted identity holds");
    sub_verify
        ->add_option("suite", suite,
                     "qbinom|basis|recurrence|gf|series|all (all uses the "
                     "default bounds)")
        ->required()
        ->check(CLI::IsMember({"qbinom", "basis", "recurrence", "gf", "series",
                               "all"}));
    sub_verify
        ->add_option("--nmax", bounds.qbinom_nmax,
                     "Sweep bound for the running suite (basis expansion "
                     "capped at 20, gf at 4)")
        ->check(CLI::Range(0, 50));
    sub_verify
        ->add_option("--kmax", bounds.basis_kmax,
                     "Basis dual-recurrence bound")
        ->check(CLI::Range(0, 64));
    sub_verify
        ->add_option("--jmax", bounds.rec_jmax, "Recurrence level bound")
        ->check(CLI::Range(0, 20));
    sub_verify
        ->add_option("--order", bounds.series_order, "Series truncation order")
        ->check(CLI::Range(2, 60));
    sub_verify
        ->add_option("--primes", bounds.gf_primes,
                     "Primes for the subspace oracle (n capped at 4, chains "
                     "at 3)")
        ->check(CLI::Range(2, 97));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sub_qbinom) {
            return run_qbinom(n, k, q, !qbinom_q->empty(), format);
        }
        if (*sub_triangle) {
            return run_triangle(rows, q, !triangle_q->empty(), diagonal_sums,
                                format);
        }
        if (*sub_fib) {
            return run_fib(count, q, !fib_q_opt->empty(), level,
                           parse_convention(convention), format);
        }
        if (*sub_series) {
            return run_series(level, order, q, !series_q->empty(),
                              parse_convention(convention), format);
        }
        if (*sub_verify) {
            // --nmax names the sweep bound of whichever suite runs.
            if (sub_verify->count("--nmax") > 0) {
                const int nmax = bounds.qbinom_nmax;
                bounds.basis_nmax = nmax;
                if (suite == "recurrence") {
                    if (nmax < 2) {
                        std::cerr << "error: recurrence needs --nmax >= 2\n";
                        return 2;
                    }
                    bounds.rec_nmax = nmax;
                }
                if (suite == "gf") {
                    bounds.gf_nmax = nmax;
                }
            }
            if (bounds.gf_nmax > qgauss::kMaxSubspaceDim) {
                std::cerr << "error: gf suite is capped at n <= "
                          << qgauss::kMaxSubspaceDim << "\n";
                return 2;
            }
            if (suite == "basis" && bounds.basis_nmax > 20) {
                std::cerr << "error: basis expansion is capped at n <= 20\n";
                return 2;
            }
            if (suite == "all") {
                bounds = VerifyBounds{};
            }
            return run_verify(suite, bounds);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
