#pragma once

// Exact rational scalars. Thin layer over GMP's mpq_class: canonical form is
// maintained by every helper here, and text I/O uses the "p/q" convention
// shared by the JSON fixtures and reports.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtrace {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with optional whitespace padding.
inline Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rational literal with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    long e = exp;
    if (e < 0) {
        b = Rational(1) / b;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    acc.canonicalize();
    return acc;
}

inline Integer integer_pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace qtrace
