#pragma once

#include <map>
#include <string>

#include "qrs/element.hpp"

namespace qrs {

// Scalar combination of monomial (x) monomial pairs over one signature.
// Multiplication is plain componentwise: (a(x)b)(c(x)d) = ac (x) bd, with
// no braiding twist.
class TensorElement {
public:
    struct PairLess {
        MonomialLess less;
        bool operator()(const std::pair<Monomial, Monomial>& a,
                        const std::pair<Monomial, Monomial>& b) const {
            if (less(a.first, b.first))
                return true;
            if (less(b.first, a.first))
                return false;
            return less(a.second, b.second);
        }
    };
    using TermMap = std::map<std::pair<Monomial, Monomial>, Scalar, PairLess>;

    explicit TensorElement(SigPtr sig);

    static TensorElement zero(SigPtr sig) { return TensorElement(std::move(sig)); }
    static TensorElement one(SigPtr sig);
    // a (x) b for full elements (expands the term products)
    static TensorElement outer(const Element& a, const Element& b);

    const SigPtr& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;
    TensorElement operator*(const Scalar& c) const;
    TensorElement operator-() const;
    TensorElement pow(int n) const;  // n >= 0

    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    void add_term(const Monomial& a, const Monomial& b, const Scalar& c);

    // rendered as a sum of `a (x) b` terms
    std::string render() const;

private:
    SigPtr sig_;
    TermMap terms_;
};

inline TensorElement operator*(const Scalar& c, const TensorElement& t) { return t * c; }

// Triple tensor, only what coassociativity checking needs.
class Tensor3 {
public:
    struct TripleLess {
        MonomialLess less;
        bool operator()(const std::tuple<Monomial, Monomial, Monomial>& a,
                        const std::tuple<Monomial, Monomial, Monomial>& b) const;
    };
    using TermMap = std::map<std::tuple<Monomial, Monomial, Monomial>, Scalar, TripleLess>;

    explicit Tensor3(SigPtr sig);
    const TermMap& terms() const { return terms_; }
    void add_term(const Monomial& a, const Monomial& b, const Monomial& c, const Scalar& k);
    bool operator==(const Tensor3& o) const;
    bool operator!=(const Tensor3& o) const { return !(*this == o); }
    bool is_zero() const { return terms_.empty(); }

private:
    SigPtr sig_;
    TermMap terms_;
};

}  // namespace qrs
