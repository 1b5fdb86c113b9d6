#pragma once

#include <array>

#include "qrs/scalar.hpp"

namespace qrs {

// Exact evaluation of scalars at rational parameter samples r0, s0.
// Works in the 9-dimensional Q-algebra Q[u,v]/(u^3 - r0, v^3 - s0), i.e.
// u and v become abstract cube roots of the samples; no floating point.
// Basis: u^i v^j with 0 <= i,j < 3, index 3*i + j.
struct EvalValue {
    std::array<Rational, 9> c{};

    bool operator==(const EvalValue& o) const { return c == o.c; }
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    bool is_zero() const;
};

class EvalContext {
public:
    // r0, s0 must be nonzero (u, v are invertible in the Laurent ring).
    EvalContext(Rational r0, Rational s0);

    const Rational& r0() const { return r0_; }
    const Rational& s0() const { return s0_; }

    EvalValue from_rational(const Rational& q) const;
    EvalValue mul(const EvalValue& a, const EvalValue& b) const;
    EvalValue add(const EvalValue& a, const EvalValue& b) const;
    // throws MathError if x is not invertible in the quotient algebra
    EvalValue inverse(const EvalValue& x) const;

    EvalValue eval(const LaurentPoly& p) const;
    // num/den evaluation; throws MathError when den is not invertible at
    // the sample (in particular when it vanishes)
    EvalValue eval(const Scalar& x) const;

private:
    Rational r0_, s0_;
    EvalValue basis_product(int i1, int j1, int i2, int j2) const;
};

// Convenience wrapper matching the operation-level interface.
EvalValue eval_numeric(const Scalar& x, const Rational& r0, const Rational& s0);

}  // namespace qrs
