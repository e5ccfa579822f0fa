#pragma once

#include <gmpxx.h>
#include <string>

namespace fer {

// All exact non-integer values (Seshadri constants, ratios) are GMP
// rationals. mpq_class keeps the canonical form we require: denominator
// positive, gcd(|num|, den) = 1.
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den) {
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

// "p/q", or just "p" when the denominator is 1. Never a float.
inline std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Cosmetic decimal rendering with an explicit approximation marker,
// e.g. "~4.5". Exact output always goes through rational_str.
inline std::string rational_approx_str(const Rational& q, int digits = 6) {
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class ip = num / den;
    mpz_class rem = num % den;
    std::string s = (neg ? "-" : "") + ip.get_str();
    if (rem != 0) {
        s += ".";
        for (int i = 0; i < digits && rem != 0; ++i) {
            rem *= 10;
            mpz_class d = rem / den;
            rem %= den;
            s += d.get_str();
        }
        while (!s.empty() && s.back() == '0') s.pop_back();
    }
    return "~" + s;
}

} // namespace fer
