#pragma once

#include <gmpxx.h>

#include <string>

#include "qgauss/errors.hpp"

namespace qgauss {

/// Unbounded signed integer. Arithmetic never overflows and zero is canonical.
using ArbInt = mpz_class;

/// Exact rational in lowest terms with positive denominator. GMP keeps
/// arithmetic results canonical; construct from raw pairs only through
/// make_rational so the invariant holds from the start.
using Rational = mpq_class;

/// num/den reduced to lowest terms, den > 0. Throws DomainError on den == 0.
Rational make_rational(const ArbInt& num, const ArbInt& den);

/// base^e for e >= 0.
ArbInt pow_int(const ArbInt& base, unsigned long e);

/// base^e for any signed e. Throws ZeroBaseError on 0 raised to e < 0.
Rational pow_rational(const Rational& base, long e);

std::string to_string(const ArbInt& v);

/// "n" when den == 1, "n/d" otherwise.
std::string to_string(const Rational& v);

}  // namespace qgauss
