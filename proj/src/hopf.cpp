#include "qrs/hopf.hpp"

#include "qrs/errors.hpp"
#include "qrs/parser.hpp"
#include "qrs/random_gen.hpp"

namespace qrs {

namespace {

SigPtr ucheck() {
    return AlgebraSignature::preset(Preset::UcheckGE0);
}

void require_ucheck(const Element& x, const char* op) {
    if (x.signature()->name() != "UcheckGE0")
        throw AlgebraError(std::string(op) + ": defined on UcheckGE0 only");
}

struct GenImages {
    // coproduct images of K1, K2, E1, E3, E2 (signature order)
    std::vector<TensorElement> delta;
    // antipode images, same order
    std::vector<Element> s;
};

Element gen(const SigPtr& sig, const char* name, int e = 1) {
    return Element::generator(sig, name, e);
}

// K1^a K2^b as an element
Element klike(const SigPtr& sig, int a, int b) {
    Monomial m{std::vector<int32_t>(sig->size(), 0)};
    m.exps[sig->index_of("K1")] = a;
    m.exps[sig->index_of("K2")] = b;
    return Element::monomial(sig, m, Scalar(1));
}

const GenImages& images() {
    static const GenImages imgs = [] {
        SigPtr sig = ucheck();
        GenImages g;
        Element one = Element::one(sig);
        Element e1 = gen(sig, "E1"), e2 = gen(sig, "E2");
        Element k1 = gen(sig, "K1"), k2 = gen(sig, "K2");
        Scalar s = Scalar::s();

        TensorElement d_k1 = TensorElement::outer(k1, k1);
        TensorElement d_k2 = TensorElement::outer(k2, k2);
        TensorElement d_e1 =
            TensorElement::outer(e1, one) + TensorElement::outer(klike(sig, 2, -1), e1);
        TensorElement d_e2 =
            TensorElement::outer(e2, one) + TensorElement::outer(klike(sig, -1, 2), e2);
        TensorElement d_e3 = d_e1 * d_e2 - s * (d_e2 * d_e1);

        g.delta = {d_k1, d_k2, d_e1, d_e3, d_e2};

        Element s_k1 = gen(sig, "K1", -1);
        Element s_k2 = gen(sig, "K2", -1);
        Element s_e1 = -(klike(sig, -2, 1) * e1);
        Element s_e2 = -(klike(sig, 1, -2) * e2);
        // S is an anti-map: S(E3) = S(E2)S(E1) - s S(E1)S(E2)
        Element s_e3 = s_e2 * s_e1 - s_e1 * s_e2 * s;
        g.s = {s_k1, s_k2, s_e1, s_e3, s_e2};
        return g;
    }();
    return imgs;
}

TensorElement group_like_power(const SigPtr& sig, int pos, int e) {
    // Delta(K^e) = K^e (x) K^e for either sign of e
    Element k = Element::generator(sig, pos, e);
    return TensorElement::outer(k, k);
}

}  // namespace

TensorElement coproduct(const Element& x) {
    require_ucheck(x, "coproduct");
    const SigPtr& sig = x.signature();
    const GenImages& img = images();
    TensorElement out(sig);
    for (const auto& [m, c] : x.terms()) {
        TensorElement acc = TensorElement::one(sig);
        for (size_t i = 0; i < m.exps.size(); ++i) {
            int e = m.exps[i];
            if (e == 0)
                continue;
            if (sig->generators()[i].invertible) {
                acc = acc * group_like_power(sig, int(i), e);
            } else {
                acc = acc * img.delta[i].pow(e);
            }
        }
        out = out + acc * c;
    }
    return out;
}

Scalar counit(const Element& x) {
    require_ucheck(x, "counit");
    Scalar out(0);
    for (const auto& [m, c] : x.terms()) {
        bool pure_k = true;
        for (size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] != 0 && !x.signature()->generators()[i].invertible)
                pure_k = false;
        if (pure_k)
            out += c;  // eps(K1^a K2^b) = 1
    }
    return out;
}

namespace {

Element antipode_impl(const Element& x, const std::vector<Element>& s_imgs) {
    const SigPtr& sig = x.signature();
    Element out = Element::zero(sig);
    for (const auto& [m, c] : x.terms()) {
        // anti-map: reverse the normal-ordered word
        Element acc = Element::one(sig);
        for (size_t ri = m.exps.size(); ri-- > 0;) {
            int e = m.exps[ri];
            if (e == 0)
                continue;
            if (sig->generators()[ri].invertible) {
                acc = acc * Element::generator(sig, int(ri), -e);
            } else {
                acc = acc * s_imgs[ri].pow(e);
            }
        }
        out += acc * c;
    }
    return out;
}

}  // namespace

Element antipode(const Element& x) {
    require_ucheck(x, "antipode");
    return antipode_impl(x, images().s);
}

Element antipode_with_images(const Element& x, const Element& img_e1, const Element& img_e2) {
    require_ucheck(x, "antipode");
    const SigPtr& sig = x.signature();
    Scalar s = Scalar::s();
    std::vector<Element> imgs = images().s;
    imgs[sig->index_of("E1")] = img_e1;
    imgs[sig->index_of("E2")] = img_e2;
    imgs[sig->index_of("E3")] = img_e2 * img_e1 - img_e1 * img_e2 * s;
    return antipode_impl(x, imgs);
}

Element antipode_law_left(const Element& x, const Element& img_e1, const Element& img_e2) {
    TensorElement d = coproduct(x);
    Element out = Element::zero(x.signature());
    for (const auto& [k, c] : d.terms()) {
        Element a = Element::monomial(x.signature(), k.first, c);
        Element b = Element::monomial(x.signature(), k.second, Scalar(1));
        out += antipode_with_images(a, img_e1, img_e2) * b;
    }
    return out;
}

Element antipode_law_right(const Element& x, const Element& img_e1, const Element& img_e2) {
    TensorElement d = coproduct(x);
    Element out = Element::zero(x.signature());
    for (const auto& [k, c] : d.terms()) {
        Element a = Element::monomial(x.signature(), k.first, c);
        Element b = Element::monomial(x.signature(), k.second, Scalar(1));
        out += a * antipode_with_images(b, img_e1, img_e2);
    }
    return out;
}

Tensor3 coproduct_left(const TensorElement& t) {
    Tensor3 out(t.signature());
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = coproduct(Element::monomial(t.signature(), k.first, c));
        for (const auto& [dk, dc] : d.terms())
            out.add_term(dk.first, dk.second, k.second, dc);
    }
    return out;
}

Tensor3 coproduct_right(const TensorElement& t) {
    Tensor3 out(t.signature());
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = coproduct(Element::monomial(t.signature(), k.second, c));
        for (const auto& [dk, dc] : d.terms())
            out.add_term(k.first, dk.first, dk.second, dc);
    }
    return out;
}

Element counit_left(const TensorElement& t) {
    Element out = Element::zero(t.signature());
    for (const auto& [k, c] : t.terms()) {
        Scalar e = counit(Element::monomial(t.signature(), k.first, c));
        out += Element::monomial(t.signature(), k.second, e);
    }
    return out;
}

Element counit_right(const TensorElement& t) {
    Element out = Element::zero(t.signature());
    for (const auto& [k, c] : t.terms()) {
        Scalar e = counit(Element::monomial(t.signature(), k.second, Scalar(1)));
        out += Element::monomial(t.signature(), k.first, c * e);
    }
    return out;
}

HopfReport verify_hopf_axioms(int degree_bound, uint64_t seed) {
    if (degree_bound < 1)
        throw AlgebraError("verify_hopf_axioms: degree bound must be >= 1");
    SigPtr sig = ucheck();
    const GenImages& img = images();
    HopfReport report;

    auto fail = [&](const std::string& what) {
        if (report.pass) {
            report.pass = false;
            report.first_failure = what;
        }
    };

    auto check_all = [&](const Element& x, const std::string& label) {
        // coassociativity
        TensorElement d = coproduct(x);
        ++report.cases_checked;
        if (coproduct_left(d) != coproduct_right(d))
            fail("coassociativity on " + label);
        // counit law
        if (counit_left(d) != x || counit_right(d) != x)
            fail("counit law on " + label);
        // antipode law
        Element img_e1 = img.s[sig->index_of("E1")];
        Element img_e2 = img.s[sig->index_of("E2")];
        Element expected = Element::constant(sig, counit(x));
        if (antipode_law_left(x, img_e1, img_e2) != expected ||
            antipode_law_right(x, img_e1, img_e2) != expected)
            fail("antipode law on " + label);
    };

    // exhaustive over monomials: K exponents in [-1,1]^2, E-degree <= bound
    int e1p = sig->index_of("E1"), e3p = sig->index_of("E3"), e2p = sig->index_of("E2");
    for (int k1 = -1; k1 <= 1; ++k1)
        for (int k2 = -1; k2 <= 1; ++k2)
            for (int i = 0; i <= degree_bound; ++i)
                for (int j = 0; i + 2 * j <= degree_bound; ++j)
                    for (int k = 0; i + 2 * j + k <= degree_bound; ++k) {
                        Monomial m{std::vector<int32_t>(sig->size(), 0)};
                        m.exps[sig->index_of("K1")] = k1;
                        m.exps[sig->index_of("K2")] = k2;
                        m.exps[e1p] = i;
                        m.exps[e3p] = j;
                        m.exps[e2p] = k;
                        Element x = Element::monomial(sig, m, Scalar(1));
                        check_all(x, render(x));
                    }

    // randomized elements and multiplicativity
    std::mt19937_64 rng(seed);
    for (int round = 0; round < 20; ++round) {
        Element x = random_element(rng, sig, std::min(degree_bound, 2));
        Element y = random_element(rng, sig, std::min(degree_bound, 2));
        check_all(x, "random element");
        ++report.cases_checked;
        if (coproduct(x * y) != coproduct(x) * coproduct(y))
            fail("coproduct multiplicativity");
        if (counit(x * y) != counit(x) * counit(y))
            fail("counit multiplicativity");
        if (antipode(x * y) != antipode(y) * antipode(x))
            fail("antipode anti-multiplicativity");
    }
    return report;
}

}  // namespace qrs
