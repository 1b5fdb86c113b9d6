#include "qrs/eval.hpp"

namespace qrs {

bool EvalValue::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0)
            return false;
    return true;
}

Rational EvalValue::rational_value() const {
    if (!is_rational())
        throw MathError("EvalValue: not rational");
    return c[0];
}

bool EvalValue::is_zero() const {
    for (const auto& x : c)
        if (x != 0)
            return false;
    return true;
}

EvalContext::EvalContext(Rational r0, Rational s0) : r0_(std::move(r0)), s0_(std::move(s0)) {
    if (r0_ == 0 || s0_ == 0)
        throw MathError("EvalContext: samples must be nonzero");
}

EvalValue EvalContext::from_rational(const Rational& q) const {
    EvalValue v;
    v.c[0] = q;
    return v;
}

EvalValue EvalContext::basis_product(int i1, int j1, int i2, int j2) const {
    int i = i1 + i2, j = j1 + j2;
    Rational f(1);
    if (i >= 3) {
        i -= 3;
        f *= r0_;
    }
    if (j >= 3) {
        j -= 3;
        f *= s0_;
    }
    EvalValue v;
    v.c[3 * i + j] = f;
    return v;
}

EvalValue EvalContext::mul(const EvalValue& a, const EvalValue& b) const {
    EvalValue out;
    for (int p = 0; p < 9; ++p) {
        if (a.c[p] == 0)
            continue;
        for (int q = 0; q < 9; ++q) {
            if (b.c[q] == 0)
                continue;
            EvalValue base = basis_product(p / 3, p % 3, q / 3, q % 3);
            Rational f = a.c[p] * b.c[q];
            for (int k = 0; k < 9; ++k)
                if (base.c[k] != 0)
                    out.c[k] += base.c[k] * f;
        }
    }
    return out;
}

EvalValue EvalContext::add(const EvalValue& a, const EvalValue& b) const {
    EvalValue out;
    for (int k = 0; k < 9; ++k)
        out.c[k] = a.c[k] + b.c[k];
    return out;
}

EvalValue EvalContext::inverse(const EvalValue& x) const {
    // solve (mult-by-x) y = 1 by Gaussian elimination on the 9x9 matrix
    Rational m[9][10] = {};
    for (int col = 0; col < 9; ++col) {
        EvalValue e;
        e.c[col] = 1;
        EvalValue prod = mul(x, e);
        for (int row = 0; row < 9; ++row)
            m[row][col] = prod.c[row];
    }
    m[0][9] = 1;  // right-hand side: the basis element 1

    int row = 0;
    for (int col = 0; col < 9 && row < 9; ++col) {
        int piv = -1;
        for (int i = row; i < 9; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        for (int j = 0; j <= 9; ++j)
            std::swap(m[piv][j], m[row][j]);
        Rational d = m[row][col];
        for (int j = col; j <= 9; ++j)
            m[row][j] /= d;
        for (int i = 0; i < 9; ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            Rational f = m[i][col];
            for (int j = col; j <= 9; ++j)
                m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    // consistency + read off solution
    EvalValue y;
    for (int i = 0; i < 9; ++i) {
        int lead = -1;
        for (int j = 0; j < 9; ++j)
            if (m[i][j] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) {
            if (m[i][9] != 0)
                throw MathError("eval: denominator not invertible at sample");
            continue;
        }
        y.c[lead] = m[i][9];
    }
    if (!mul(x, y).is_rational() || mul(x, y).rational_value() != 1)
        throw MathError("eval: denominator not invertible at sample");
    return y;
}

EvalValue EvalContext::eval(const LaurentPoly& p) const {
    EvalValue out;
    for (const auto& t : p.terms()) {
        // u^m = r0^floor(m/3) * u^(m mod 3), likewise for v
        auto split = [](int32_t e) {
            int32_t q = e >= 0 ? e / 3 : -((-e + 2) / 3);
            int32_t rem = e - 3 * q;
            return std::pair<int32_t, int32_t>(q, rem);
        };
        auto [qu, iu] = split(t.eu);
        auto [qv, iv] = split(t.ev);
        Rational f = t.c * rational_pow(r0_, qu) * rational_pow(s0_, qv);
        out.c[3 * iu + iv] += f;
    }
    return out;
}

EvalValue EvalContext::eval(const Scalar& x) const {
    EvalValue n = eval(x.num());
    EvalValue d = eval(x.den());
    if (d.is_zero())
        throw MathError("eval: denominator vanishes at sample");
    return mul(n, inverse(d));
}

EvalValue eval_numeric(const Scalar& x, const Rational& r0, const Rational& s0) {
    return EvalContext(r0, s0).eval(x);
}

}  // namespace qrs
