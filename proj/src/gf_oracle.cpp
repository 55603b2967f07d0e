#include "qgauss/gf_oracle.hpp"

#include <algorithm>

#include "qgauss/qbinom.hpp"

namespace qgauss {

namespace {

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

long pow_long(int base, int e) {
    long r = 1;
    while (e-- > 0) {
        r *= base;
    }
    return r;
}

// Ascending k-subsets of {0..n-1}.
std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c < n; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

long encode(const std::vector<int>& v, int p) {
    long code = 0;
    for (size_t i = v.size(); i-- > 0;) {
        code = code * p + v[i];
    }
    return code;
}

std::vector<int> decode(long code, int n, int p) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[static_cast<size_t>(i)] = static_cast<int>(code % p);
        code /= p;
    }
    return v;
}

}  // namespace

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p)) {
        throw NotPrimeError("PrimeField: " + std::to_string(p) + " is not prime");
    }
}

std::vector<GfMatrix> enumerate_rref(int n, int k, const PrimeField& field) {
    if (k < 0 || k > n) {
        throw DomainError("enumerate_rref: need 0 <= k <= n");
    }
    std::vector<GfMatrix> out;
    if (k == 0) {
        out.emplace_back();  // the zero subspace, empty basis
        return out;
    }
    const int p = field.p();
    for (const std::vector<int>& pivots : combinations(n, k)) {
        // Free positions: in row i, columns right of its pivot that are not
        // pivot columns themselves. Everything else is forced by RREF.
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i) {
            for (int c = pivots[static_cast<size_t>(i)] + 1; c < n; ++c) {
                if (!std::binary_search(pivots.begin(), pivots.end(), c)) {
                    free_pos.emplace_back(i, c);
                }
            }
        }
        const long total = pow_long(p, static_cast<int>(free_pos.size()));
        for (long fill = 0; fill < total; ++fill) {
            GfMatrix m(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(n), 0));
            for (int i = 0; i < k; ++i) {
                m[static_cast<size_t>(i)][static_cast<size_t>(pivots[static_cast<size_t>(i)])] = 1;
            }
            long rest = fill;
            for (const auto& [row, col] : free_pos) {
                m[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                    static_cast<int>(rest % p);
                rest /= p;
            }
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::set<long> row_space(const GfMatrix& m, const PrimeField& field) {
    const int p = field.p();
    std::set<long> space;
    if (m.empty()) {
        space.insert(0);
        return space;
    }
    const int n = static_cast<int>(m[0].size());
    const int k = static_cast<int>(m.size());
    const long total = pow_long(p, k);
    for (long sel = 0; sel < total; ++sel) {
        std::vector<int> v(static_cast<size_t>(n), 0);
        long rest = sel;
        for (int i = 0; i < k; ++i) {
            const int a = static_cast<int>(rest % p);
            rest /= p;
            for (int c = 0; c < n; ++c) {
                v[static_cast<size_t>(c)] =
                    field.add(v[static_cast<size_t>(c)],
                              field.mul(a, m[static_cast<size_t>(i)][static_cast<size_t>(c)]));
            }
        }
        space.insert(encode(v, p));
    }
    return space;
}

ArbInt count_subspaces(int n, int k, int p) {
    const PrimeField field(p);
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("count_subspaces: need 0 <= k <= n");
    }
    if (n > kMaxSubspaceDim) {
        throw DomainError("count_subspaces: dimension above the enumeration cap");
    }
    return ArbInt(static_cast<long>(enumerate_rref(n, k, field).size()));
}

namespace {

// Flags are counted by extending a d-dimensional subspace (as its full
// element set) with each vector outside it; span(V, v) = {a*v + u} has
// p * |V| elements, and distinct spans are distinct (d+1)-subspaces.
ArbInt count_flags_from(const std::set<long>& subspace, int dim, int n,
                        const PrimeField& field) {
    if (dim == n) {
        return ArbInt(1);
    }
    const int p = field.p();
    std::set<std::set<long>> extensions;
    const long total = pow_long(p, n);
    for (long code = 0; code < total; ++code) {
        if (subspace.count(code) > 0) {
            continue;
        }
        const std::vector<int> v = decode(code, n, p);
        std::set<long> span;
        for (long u_code : subspace) {
            const std::vector<int> u = decode(u_code, n, p);
            for (int a = 0; a < p; ++a) {
                std::vector<int> w(static_cast<size_t>(n));
                for (int c = 0; c < n; ++c) {
                    w[static_cast<size_t>(c)] =
                        field.add(u[static_cast<size_t>(c)],
                                  field.mul(a, v[static_cast<size_t>(c)]));
                }
                span.insert(encode(w, p));
            }
        }
        extensions.insert(std::move(span));
    }
    ArbInt total_flags(0);
    for (const auto& ext : extensions) {
        total_flags += count_flags_from(ext, dim + 1, n, field);
    }
    return total_flags;
}

}  // namespace

ArbInt count_maximal_chains(int n, int p) {
    const PrimeField field(p);
    if (n < 0) {
        throw DomainError("count_maximal_chains: negative dimension");
    }
    if (n > kMaxChainDim) {
        throw DomainError("count_maximal_chains: dimension above the enumeration cap");
    }
    return count_flags_from({0}, 0, n, field);
}

VerificationReport verify_gf_counts(int n_max, const std::vector<int>& primes) {
    if (n_max < 0 || n_max > kMaxSubspaceDim) {
        throw DomainError("verify_gf_counts: n_max outside [0, " +
                          std::to_string(kMaxSubspaceDim) + "]");
    }
    VerificationReport report{.suite = "gf"};
    for (int p : primes) {
        const ArbInt q0(p);
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                const ArbInt counted = count_subspaces(n, k, p);
                const ArbInt expected = eval_int(qbinom_rec(n, k), q0);
                report.record(counted == expected,
                              {{{"check", "subspaces"},
                                {"n", std::to_string(n)},
                                {"k", std::to_string(k)},
                                {"p", std::to_string(p)}},
                               counted.get_str(),
                               expected.get_str()});
            }
        }
        for (int n = 0; n <= std::min(n_max, kMaxChainDim); ++n) {
            const ArbInt counted = count_maximal_chains(n, p);
            const ArbInt expected = eval_int(q_factorial(n), q0);
            report.record(counted == expected,
                          {{{"check", "maximal_chains"},
                            {"n", std::to_string(n)},
                            {"p", std::to_string(p)}},
                           counted.get_str(),
                           expected.get_str()});
        }
    }
    return report;
}

}  // namespace qgauss
