#include "qgauss/laurent.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace qgauss {

LaurentPoly LaurentPoly::constant(ArbInt c) { return term(std::move(c), 0); }

LaurentPoly LaurentPoly::term(ArbInt c, int exp) {
    LaurentPoly p;
    p.set(exp, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::q_power(int exp) { return term(ArbInt(1), exp); }

void LaurentPoly::set(int exp, ArbInt c) {
    if (c == 0) {
        terms_.erase(exp);
    } else {
        terms_[exp] = std::move(c);
    }
}

ArbInt LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? ArbInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (is_zero()) {
        throw DomainError("min_exponent of zero polynomial");
    }
    return terms_.begin()->first;
}

int LaurentPoly::degree() const {
    if (is_zero()) {
        throw DomainError("degree of zero polynomial");
    }
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int d) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e + d, c);
    }
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        acc += Rational(c) * pow_rational(q0, e);
    }
    return acc;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e, -c);
    }
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly r;
    if (lhs.is_zero() || rhs.is_zero()) {
        return r;
    }
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            r.terms_[ea + eb] += ca * cb;
        }
    }
    // Cancellation can leave explicit zeros behind.
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

std::string LaurentPoly::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const ArbInt mag = abs(c);
        if (e == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += 'q';
            if (e != 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool accept(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

std::string parse_digits(Cursor& cur) {
    std::string digits;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        digits += cur.text[cur.pos++];
    }
    if (digits.empty()) {
        throw ParseError("expected digits at offset " + std::to_string(cur.pos));
    }
    return digits;
}

int parse_exponent(Cursor& cur) {
    const bool neg = cur.accept('-');
    const std::string digits = parse_digits(cur);
    try {
        const long v = std::stol(digits);
        if (v > 1'000'000) {
            throw std::out_of_range("exponent");
        }
        return neg ? static_cast<int>(-v) : static_cast<int>(v);
    } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range: " + digits);
    }
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    Cursor cur{text};
    LaurentPoly result;
    cur.skip_ws();
    if (cur.done()) {
        throw ParseError("empty polynomial text");
    }
    bool negative = cur.accept('-');
    while (true) {
        cur.skip_ws();
        ArbInt coeff(1);
        bool have_coeff = false;
        if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = ArbInt(parse_digits(cur));
            have_coeff = true;
            cur.accept('*');
        }
        int exp = 0;
        if (cur.accept('q')) {
            exp = cur.accept('^') ? parse_exponent(cur) : 1;
        } else if (!have_coeff) {
            throw ParseError("expected term at offset " + std::to_string(cur.pos));
        }
        result += term(negative ? ArbInt(-coeff) : coeff, exp);

        cur.skip_ws();
        if (cur.done()) {
            return result;
        }
        if (cur.accept('+')) {
            negative = false;
        } else if (cur.accept('-')) {
            negative = true;
        } else {
            throw ParseError(std::string("unexpected character '") + cur.peek() +
                             "' at offset " + std::to_string(cur.pos));
        }
    }
}

ArbInt eval_int(const LaurentPoly& p, const ArbInt& q0) {
    const Rational v = p.eval(Rational(q0));
    if (v.get_den() != 1) {
        throw DomainError("eval_int: value " + to_string(v) + " is not an integer");
    }
    return v.get_num();
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        throw DomainError("div_exact: division by zero polynomial");
    }
    if (a.is_zero()) {
        return {};
    }
    // Reduce to ordinary polynomials with constant term present, divide, and
    // restore the exponent offset at the end.
    const int offset = a.min_exponent() - b.min_exponent();
    LaurentPoly rem = a.shifted(-a.min_exponent());
    const LaurentPoly den = b.shifted(-b.min_exponent());
    const int den_deg = den.degree();
    const ArbInt den_lead = den.coeff(den_deg);

    LaurentPoly quot;
    while (!rem.is_zero() && rem.degree() >= den_deg) {
        const ArbInt lead = rem.coeff(rem.degree());
        // An exact quotient over the integers forces leading-coefficient
        // divisibility at every step.
        if (!mpz_divisible_p(lead.get_mpz_t(), den_lead.get_mpz_t())) {
            throw InexactDivisionError("div_exact: leading coefficient " + to_string(lead) +
                                       " not divisible by " + to_string(den_lead));
        }
        const LaurentPoly t = LaurentPoly::term(lead / den_lead, rem.degree() - den_deg);
        quot += t;
        rem -= t * den;
    }
    if (!rem.is_zero()) {
        throw InexactDivisionError("div_exact: nonzero remainder " + rem.str());
    }
    return quot.shifted(offset);
}

}  // namespace qgauss
