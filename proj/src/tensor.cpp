#include "qrs/tensor.hpp"

#include <sstream>

#include "qrs/errors.hpp"
#include "qrs/parser.hpp"

namespace qrs {

TensorElement::TensorElement(SigPtr sig)
    : sig_(std::move(sig)), terms_(PairLess{MonomialLess{sig_.get()}}) {}

TensorElement TensorElement::one(SigPtr sig) {
    TensorElement t(std::move(sig));
    Monomial unit{std::vector<int32_t>(t.sig_->size(), 0)};
    t.add_term(unit, unit, Scalar(1));
    return t;
}

TensorElement TensorElement::outer(const Element& a, const Element& b) {
    if (a.signature()->name() != b.signature()->name())
        throw AlgebraError("tensor outer: signature mismatch");
    TensorElement t(a.signature());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            t.add_term(ma, mb, ca * cb);
    return t;
}

void TensorElement::add_term(const Monomial& a, const Monomial& b, const Scalar& c) {
    if (c.is_zero())
        return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement out = *this;
    for (const auto& [k, c] : o.terms_)
        out.add_term(k.first, k.second, c);
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    return *this + (-o);
}

TensorElement TensorElement::operator-() const {
    TensorElement out = *this;
    for (auto& [k, c] : out.terms_)
        c = -c;
    return out;
}

TensorElement TensorElement::operator*(const Scalar& c) const {
    if (c.is_zero())
        return TensorElement(sig_);
    TensorElement out = *this;
    for (auto& [k, v] : out.terms_)
        v *= c;
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    TensorElement out(sig_);
    for (const auto& [ka, ca] : terms_) {
        Element left1 = Element::monomial(sig_, ka.first, Scalar(1));
        Element left2 = Element::monomial(sig_, ka.second, Scalar(1));
        for (const auto& [kb, cb] : o.terms_) {
            Element p1 = left1 * Element::monomial(sig_, kb.first, Scalar(1));
            Element p2 = left2 * Element::monomial(sig_, kb.second, Scalar(1));
            Scalar f = ca * cb;
            for (const auto& [m1, c1] : p1.terms())
                for (const auto& [m2, c2] : p2.terms())
                    out.add_term(m1, m2, f * c1 * c2);
        }
    }
    return out;
}

TensorElement TensorElement::pow(int n) const {
    if (n < 0)
        throw AlgebraError("tensor pow: negative exponent");
    TensorElement acc = one(sig_);
    for (int i = 0; i < n; ++i)
        acc = acc * *this;
    return acc;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (sig_->name() != o.sig_->name() || terms_.size() != o.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second)
            return false;
    return true;
}

std::string TensorElement::render() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [pair, c] = *it;
        Element left = Element::monomial(sig_, pair.first, c);
        std::string left_str = qrs::render(left);
        bool neg = !left_str.empty() && left_str[0] == '-';
        if (neg)
            left_str.erase(0, 1);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        os << left_str << " (x) " << render_monomial(*sig_, pair.second);
    }
    return os.str();
}

bool Tensor3::TripleLess::operator()(const std::tuple<Monomial, Monomial, Monomial>& a,
                                     const std::tuple<Monomial, Monomial, Monomial>& b) const {
    if (less(std::get<0>(a), std::get<0>(b)))
        return true;
    if (less(std::get<0>(b), std::get<0>(a)))
        return false;
    if (less(std::get<1>(a), std::get<1>(b)))
        return true;
    if (less(std::get<1>(b), std::get<1>(a)))
        return false;
    return less(std::get<2>(a), std::get<2>(b));
}

Tensor3::Tensor3(SigPtr sig)
    : sig_(std::move(sig)), terms_(TripleLess{MonomialLess{sig_.get()}}) {}

void Tensor3::add_term(const Monomial& a, const Monomial& b, const Monomial& c,
                       const Scalar& k) {
    if (k.is_zero())
        return;
    auto key = std::make_tuple(a, b, c);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), k);
    } else {
        it->second += k;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool Tensor3::operator==(const Tensor3& o) const {
    if (terms_.size() != o.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second)
            return false;
    return true;
}

}  // namespace qrs
