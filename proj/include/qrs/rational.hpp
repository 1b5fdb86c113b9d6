#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qrs/errors.hpp"

namespace qrs {

// Exact rational coefficients. Arbitrary precision so that iterated
// rewriting and Gaussian elimination never overflow.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& x, long n) {
    if (n == 0)
        return Rational(1);
    if (x == 0) {
        if (n < 0)
            throw MathError("rational_pow: negative power of zero");
        return Rational(0);
    }
    Rational base = n > 0 ? x : Rational(1) / x;
    unsigned long k = n > 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
    Rational acc(1);
    while (k) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// Renders "p" or "p/q".
inline std::string rational_str(const Rational& x) {
    return x.str();
}

inline Rational rational_from_string(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw ParseError("invalid rational literal: " + text);
    }
}

}  // namespace qrs
