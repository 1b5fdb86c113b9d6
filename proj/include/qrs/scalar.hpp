#pragma once

#include <string>

#include "qrs/laurent.hpp"

namespace qrs {

// Element of the coefficient field Q(u,v), u = r^(1/3), v = s^(1/3).
//
// Canonical form: num/den are ordinary polynomials (nonnegative exponents)
// with gcd 1, den monic under graded-lex and sharing no monomial factor
// with num. Laurent exponents of inputs are absorbed into the denominator.
// Structural equality of canonical forms decides equality in the field.
class Scalar {
public:
    Scalar() : num_(), den_(LaurentPoly::one()) {}
    Scalar(int64_t n) : Scalar(Rational(n)) {}
    explicit Scalar(const Rational& q);

    // r^er * s^es with er, es in (1/3)Z; throws MathError otherwise.
    static Scalar from_rs(const Rational& er, const Rational& es);
    // u^eu * v^ev directly.
    static Scalar uv_monomial(int32_t eu, int32_t ev, const Rational& c = Rational(1));
    static Scalar r() { return uv_monomial(3, 0); }
    static Scalar s() { return uv_monomial(0, 3); }
    static Scalar from_num_den(LaurentPoly num, LaurentPoly den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_one(); }
    bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
    Rational rational_value() const;  // requires is_rational()

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inv() const;  // throws MathError on zero
    Scalar pow(long n) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // term count, used to pick simple pivots in exact elimination
    size_t complexity() const { return num_.size() + den_.size(); }

    std::string debug_str() const { return num_.debug_str() + " / " + den_.debug_str(); }

private:
    LaurentPoly num_, den_;
    void canonicalize();
};

}  // namespace qrs
