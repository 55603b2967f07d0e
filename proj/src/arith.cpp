#include "qgauss/arith.hpp"

namespace qgauss {

Rational make_rational(const ArbInt& num, const ArbInt& den) {
    if (den == 0) {
        throw DomainError("make_rational: zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

ArbInt pow_int(const ArbInt& base, unsigned long e) {
    ArbInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) {
        return Rational(1);
    }
    if (base == 0 && e < 0) {
        throw ZeroBaseError("pow_rational: negative power of zero");
    }
    const unsigned long mag = e > 0 ? static_cast<unsigned long>(e)
                                    : static_cast<unsigned long>(-(e + 1)) + 1;
    ArbInt num = pow_int(base.get_num(), mag);
    ArbInt den = pow_int(base.get_den(), mag);
    if (e < 0) {
        std::swap(num, den);
    }
    return make_rational(num, den);
}

std::string to_string(const ArbInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace qgauss
