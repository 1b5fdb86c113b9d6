#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrs/rational.hpp"

namespace qrs {

// Laurent polynomial over Q in two commuting indeterminates u, v.
// u and v stand for the cube roots of the two deformation parameters,
// so that every exponent appearing anywhere in the engine is an integer:
// r = u^3, s = v^3, r^(1/3)s^(-2/3) = u*v^-2.
//
// Invariant: terms are sorted ascending by (eu, ev) and no coefficient
// is zero.
class LaurentPoly {
public:
    struct Term {
        int32_t eu = 0;
        int32_t ev = 0;
        Rational c;
    };

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(Rational(1)); }
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly monomial(int32_t eu, int32_t ev, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;  // zero or a single (0,0) term

    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    // Smallest exponent of u (resp. v) over all terms. Zero polynomial -> 0.
    int32_t min_eu() const;
    int32_t min_ev() const;
    int32_t max_eu() const;
    int32_t max_ev() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    // Multiply by c * u^du * v^dv.
    LaurentPoly shifted(int32_t du, int32_t dv, const Rational& c = Rational(1)) const;
    LaurentPoly scaled(const Rational& c) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Total order used to normalize denominators: graded, then eu, then ev.
    // Requires a nonzero polynomial.
    const Term& leading_term() const;

    // Consumes an unsorted term list (duplicates allowed), canonicalizes.
    static LaurentPoly from_terms(std::vector<Term> raw);

    std::string debug_str() const;

private:
    std::vector<Term> terms_;
};

// Gcd in Q[u,v], arguments must have nonnegative exponents. The result is
// normalized to leading coefficient 1 (graded-lex). gcd(0,g) = monic g.
LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g);

// Exact division, throws MathError if g does not divide f.
LaurentPoly laurent_div_exact(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace qrs
