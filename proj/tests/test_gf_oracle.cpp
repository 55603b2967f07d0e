#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qgauss/errors.hpp"
#include "qgauss/gf_oracle.hpp"
#include "qgauss/qbinom.hpp"

using qgauss::ArbInt;
using qgauss::PrimeField;

TEST_CASE("prime field: construction and arithmetic") {
  PrimeField f5(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.neg(0) == 0);
  CHECK(f5.neg(2) == 3);
  CHECK(f5.mul(3, 4) == 2);
  CHECK_THROWS_AS(PrimeField(4), qgauss::NotPrimeError);
  CHECK_THROWS_AS(PrimeField(1), qgauss::NotPrimeError);
  CHECK_THROWS_AS(PrimeField(-7), qgauss::NotPrimeError);
}

TEST_CASE("subspace counts: hand values") {
  CHECK(qgauss::count_subspaces(1, 0, 2) == 1);
  CHECK(qgauss::count_subspaces(2, 1, 2) == 3);
  CHECK(qgauss::count_subspaces(2, 1, 3) == 4);
  CHECK(qgauss::count_subspaces(3, 1, 2) == 7);
  CHECK(qgauss::count_subspaces(4, 2, 2) == 35);
  CHECK(qgauss::count_subspaces(4, 4, 3) == 1);
  CHECK_THROWS_AS(qgauss::count_subspaces(5, 2, 2), qgauss::DomainError);
  CHECK_THROWS_AS(qgauss::count_subspaces(3, 4, 2), qgauss::DomainError);
  CHECK_THROWS_AS(qgauss::count_subspaces(3, 1, 6), qgauss::NotPrimeError);
}

TEST_CASE("subspace counts match gaussian binomials at q = p") {
  for (int p : {2, 3})
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(qgauss::count_subspaces(n, k, p) ==
              qgauss::eval_int(qgauss::qbinom_rec(n, k), p));
}

TEST_CASE("rref bases span pairwise distinct subspaces") {
  for (int p : {2, 3}) {
    PrimeField field(p);
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        auto mats = qgauss::enumerate_rref(n, k, field);
        std::set<std::set<long>> spaces;
        for (const auto& m : mats) {
          auto space = qgauss::row_space(m, field);
          // dim-k space over F_p has exactly p^k vectors
          long expect = 1;
          for (int i = 0; i < k; ++i) expect *= p;
          CHECK(static_cast<long>(space.size()) == expect);
          spaces.insert(std::move(space));
        }
        CHECK(spaces.size() == mats.size());
      }
  }
}

TEST_CASE("maximal chain counts: hand values and factorization") {
  CHECK(qgauss::count_maximal_chains(0, 2) == 1);
  CHECK(qgauss::count_maximal_chains(1, 2) == 1);
  CHECK(qgauss::count_maximal_chains(2, 2) == 3);
  CHECK(qgauss::count_maximal_chains(3, 2) == 21);
  CHECK(qgauss::count_maximal_chains(2, 3) == 4);
  CHECK(qgauss::count_maximal_chains(3, 3) == 52);
  CHECK_THROWS_AS(qgauss::count_maximal_chains(4, 2), qgauss::DomainError);

  // chains(n, p) = prod_i (p^i - 1)/(p - 1), the q-factorial at q = p
  for (int p : {2, 3})
    for (int n = 0; n <= 3; ++n) {
      ArbInt prod = 1;
      for (int i = 2; i <= n; ++i)
        prod *= (qgauss::pow_int(p, i) - 1) / (p - 1);
      CHECK(qgauss::count_maximal_chains(n, p) == prod);
      CHECK(qgauss::count_maximal_chains(n, p) ==
            qgauss::eval_int(qgauss::q_factorial(n), p));
    }
}

TEST_CASE("verification report over both primes") {
  auto report = qgauss::verify_gf_counts(4, {2, 3});
  CHECK(report.suite == "gf");
  CHECK(report.holds);
  // 15 subspace checks and 4 chain checks per prime
  CHECK(report.checked == 38);
  CHECK(!report.first_counterexample.has_value());
}
