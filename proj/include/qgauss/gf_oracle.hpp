#pragma once

#include <set>
#include <vector>

#include "qgauss/arith.hpp"
#include "qgauss/report.hpp"

namespace qgauss {

/// Prime field F_p with arithmetic on canonical representatives 0..p-1.
/// Construction rejects composite or sub-2 moduli.
class PrimeField {
public:
    explicit PrimeField(int p);

    int p() const { return p_; }
    int add(int a, int b) const { return (a + b) % p_; }
    int neg(int a) const { return (p_ - a) % p_; }
    int mul(int a, int b) const { return (a * b) % p_; }

private:
    int p_;
};

/// Enumeration caps. Subspace counts grow like p^(k(n-k)) per pivot pattern
/// and chain counts multiply them up, so the brute force stays at desk scale.
inline constexpr int kMaxSubspaceDim = 4;
inline constexpr int kMaxChainDim = 3;

/// A k x n matrix over F_p, rows of canonical representatives.
using GfMatrix = std::vector<std::vector<int>>;

/// All k x n matrices in reduced row-echelon form with k pivots over F_p.
/// Each is the canonical basis of a distinct k-dimensional subspace of
/// F_p^n, so the list enumerates subspaces without duplicates.
std::vector<GfMatrix> enumerate_rref(int n, int k, const PrimeField& field);

/// The row space of a matrix as the set of spanned vectors, each encoded in
/// base p (digit i for coordinate i). Used to cross-check RREF uniqueness.
std::set<long> row_space(const GfMatrix& m, const PrimeField& field);

/// Number of k-dimensional subspaces of F_p^n by RREF enumeration.
/// Requires 0 <= k <= n <= kMaxSubspaceDim and p prime.
ArbInt count_subspaces(int n, int k, int p);

/// Number of complete flags 0 = V_0 < V_1 < ... < V_n in F_p^n, dim V_i = i,
/// by recursive enumeration of the subspace lattice.
/// Requires 0 <= n <= kMaxChainDim and p prime.
ArbInt count_maximal_chains(int n, int p);

/// Asserts count_subspaces(n, k, p) == C(n, k)_q at q = p for all
/// k <= n <= n_max, and count_maximal_chains(n, p) == n_q! at q = p for
/// n <= min(n_max, kMaxChainDim), over every listed prime.
VerificationReport verify_gf_counts(int n_max, const std::vector<int>& primes);

}  // namespace qgauss
