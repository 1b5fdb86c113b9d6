#include "qrs/scalar.hpp"

namespace qrs {

Scalar::Scalar(const Rational& q) : num_(LaurentPoly::constant(q)), den_(LaurentPoly::one()) {}

Scalar Scalar::from_rs(const Rational& er, const Rational& es) {
    Rational eu = er * 3, ev = es * 3;
    if (denominator(eu) != 1 || denominator(ev) != 1)
        throw MathError("from_rs: exponents must be integer multiples of 1/3");
    return uv_monomial(static_cast<int32_t>(numerator(eu)), static_cast<int32_t>(numerator(ev)));
}

Scalar Scalar::uv_monomial(int32_t eu, int32_t ev, const Rational& c) {
    Scalar x;
    x.num_ = LaurentPoly::monomial(eu, ev, c);
    x.den_ = LaurentPoly::one();
    x.canonicalize();
    return x;
}

Scalar Scalar::from_num_den(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero())
        throw MathError("Scalar: zero denominator");
    Scalar x;
    x.num_ = std::move(num);
    x.den_ = std::move(den);
    x.canonicalize();
    return x;
}

Rational Scalar::rational_value() const {
    if (!is_rational())
        throw MathError("Scalar: not a rational constant");
    if (num_.is_zero())
        return Rational(0);
    return num_.terms()[0].c;
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // clear Laurent exponents, tracking the net monomial
    int32_t nu = num_.min_eu(), nv = num_.min_ev();
    int32_t du = den_.min_eu(), dv = den_.min_ev();
    num_ = num_.shifted(-nu, -nv);
    den_ = den_.shifted(-du, -dv);
    int32_t net_u = nu - du, net_v = nv - dv;

    LaurentPoly g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = laurent_div_exact(num_, g);
        den_ = laurent_div_exact(den_, g);
    }

    if (net_u > 0)
        num_ = num_.shifted(net_u, 0);
    else if (net_u < 0)
        den_ = den_.shifted(-net_u, 0);
    if (net_v > 0)
        num_ = num_.shifted(0, net_v);
    else if (net_v < 0)
        den_ = den_.shifted(0, -net_v);

    Rational lc = den_.leading_term().c;
    if (lc != 1) {
        Rational ilc = Rational(1) / lc;
        num_ = num_.scaled(ilc);
        den_ = den_.scaled(ilc);
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    Scalar out;
    if (den_ == o.den_) {
        out.num_ = num_ + o.num_;
        out.den_ = den_;
    } else {
        out.num_ = num_ * o.den_ + o.num_ * den_;
        out.den_ = den_ * o.den_;
    }
    out.canonicalize();
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
    return *this + (-o);
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero())
        return Scalar();
    Scalar out;
    if (den_.is_one() && o.den_.is_one()) {
        out.num_ = num_ * o.num_;
        out.den_ = den_;
        // products of canonical polynomials need no gcd pass
        return out;
    }
    out.num_ = num_ * o.num_;
    out.den_ = den_ * o.den_;
    out.canonicalize();
    return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inv();
}

Scalar Scalar::inv() const {
    if (is_zero())
        throw MathError("Scalar: inverse of zero");
    Scalar out;
    out.num_ = den_;
    out.den_ = num_;
    out.canonicalize();
    return out;
}

Scalar Scalar::pow(long n) const {
    if (n == 0)
        return Scalar(1);
    Scalar base = n > 0 ? *this : inv();
    unsigned long k = n > 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
    Scalar acc(1);
    while (k) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

}  // namespace qrs
