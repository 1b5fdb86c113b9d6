#include "qrs/morphisms.hpp"

#include "qrs/errors.hpp"
#include "qrs/hopf.hpp"
#include "qrs/parser.hpp"

namespace qrs {

namespace {

SigPtr ucheck() {
    return AlgebraSignature::preset(Preset::UcheckGE0);
}

Element kmono(const SigPtr& sig, int a, int b, Scalar coeff = Scalar(1)) {
    Monomial m{std::vector<int32_t>(sig->size(), 0)};
    m.exps[sig->index_of("K1")] = a;
    m.exps[sig->index_of("K2")] = b;
    return Element::monomial(sig, m, std::move(coeff));
}

struct Images {
    Element k1, k2, e1, e3, e2;
};

Images build_images(const AutParams& p) {
    SigPtr sig = ucheck();
    Images img{Element::zero(sig), Element::zero(sig), Element::zero(sig),
               Element::zero(sig), Element::zero(sig)};
    const char* t1 = p.swap ? "K2" : "K1";
    const char* t2 = p.swap ? "K1" : "K2";
    img.k1 = Element::generator(sig, t1) * p.a1;
    img.k2 = Element::generator(sig, t2) * p.a2;
    const char* f1 = p.swap ? "E2" : "E1";
    const char* f2 = p.swap ? "E1" : "E2";
    img.e1 = kmono(sig, p.a, p.b, p.b1) * Element::generator(sig, f1);
    img.e2 = kmono(sig, p.c, p.d, p.b2) * Element::generator(sig, f2);
    img.e3 = img.e1 * img.e2 - img.e2 * img.e1 * Scalar::s();
    return img;
}

}  // namespace

Element apply(const AutParams& p, const Element& x) {
    if (x.signature()->name() != "UcheckGE0")
        throw AlgebraError("apply: defined on UcheckGE0 only");
    SigPtr sig = x.signature();
    Images img = build_images(p);
    const Element* by_pos[5] = {&img.k1, &img.k2, &img.e1, &img.e3, &img.e2};

    Element out = Element::zero(sig);
    for (const auto& [m, c] : x.terms()) {
        Element acc = Element::constant(sig, c);
        for (size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] != 0)
                acc = acc * by_pos[i]->pow(m.exps[i]);
        out += acc;
    }
    return out;
}

std::optional<RelationWitness> respects_relations(const AutParams& p) {
    SigPtr sig = ucheck();
    Images img = build_images(p);
    const Scalar r = Scalar::r(), s = Scalar::s();
    const Element one = Element::one(sig);

    struct Rel {
        std::string name;
        Element residue;
    };
    auto k1i = img.k1.monomial_inverse();
    auto k2i = img.k2.monomial_inverse();

    std::vector<Rel> rels;
    rels.push_back({"K1*K1^-1 = 1", img.k1 * k1i - one});
    rels.push_back({"K2*K2^-1 = 1", img.k2 * k2i - one});
    rels.push_back({"K1*K2 = K2*K1", img.k1 * img.k2 - img.k2 * img.k1});
    rels.push_back({"K1*E1 = r^(1/3)*s^(-2/3)*E1*K1",
                    img.k1 * img.e1 -
                        img.e1 * img.k1 * Scalar::from_rs(Rational(1, 3), Rational(-2, 3))});
    rels.push_back({"K1*E2 = r^(1/3)*s^(1/3)*E2*K1",
                    img.k1 * img.e2 -
                        img.e2 * img.k1 * Scalar::from_rs(Rational(1, 3), Rational(1, 3))});
    rels.push_back({"K2*E1 = r^(-1/3)*s^(-1/3)*E1*K2",
                    img.k2 * img.e1 -
                        img.e1 * img.k2 * Scalar::from_rs(Rational(-1, 3), Rational(-1, 3))});
    rels.push_back({"K2*E2 = r^(2/3)*s^(-1/3)*E2*K2",
                    img.k2 * img.e2 -
                        img.e2 * img.k2 * Scalar::from_rs(Rational(2, 3), Rational(-1, 3))});
    rels.push_back({"serre1", img.e1 * img.e1 * img.e2 -
                                  img.e1 * img.e2 * img.e1 * (r + s) +
                                  img.e2 * img.e1 * img.e1 * (r * s)});
    rels.push_back({"serre2", img.e1 * img.e2 * img.e2 -
                                  img.e2 * img.e1 * img.e2 * (r + s) +
                                  img.e2 * img.e2 * img.e1 * (r * s)});

    for (const auto& rel : rels)
        if (!rel.residue.is_zero())
            return RelationWitness{rel.name, render(rel.residue)};
    return std::nullopt;
}

ClassifyResult classify_box(int bound) {
    if (bound < 0)
        throw AlgebraError("classify_box: bound must be >= 0");
    ClassifyResult out;
    for (int swap = 0; swap <= 1; ++swap)
        for (int a = -bound; a <= bound; ++a)
            for (int b = -bound; b <= bound; ++b)
                for (int c = -bound; c <= bound; ++c)
                    for (int d = -bound; d <= bound; ++d) {
                        AutParams p;
                        p.a = a;
                        p.b = b;
                        p.c = c;
                        p.d = d;
                        p.swap = swap != 0;
                        ++out.candidates_checked;
                        bool ok = !respects_relations(p).has_value();
                        if (ok) {
                            if (p.swap)
                                out.swap_all_rejected = false;
                            else
                                out.tuples.push_back({a, b, c, d});
                        }
                    }
    return out;
}

AutParams compose(const AutParams& p, const AutParams& q) {
    if (!p.is_valid() || !q.is_valid())
        throw AlgebraError("compose: both parameter records must be valid");
    AutParams out;
    out.a = p.a + q.a;
    out.b = p.b + q.b;
    out.c = p.c + q.c;
    out.d = p.d + q.d;
    out.a1 = p.a1 * q.a1;
    out.a2 = p.a2 * q.a2;
    // p(q(E1)) picks up the eigenvalues of p's K-scalars on q's K-block
    out.b1 = p.b1 * q.b1 * p.a1.pow(q.a) * p.a2.pow(q.b);
    out.b2 = p.b2 * q.b2 * p.a1.pow(q.c) * p.a2.pow(q.d);
    return out;
}

AutParams inverse(const AutParams& p) {
    if (!p.is_valid())
        throw AlgebraError("inverse: parameter record must be valid");
    AutParams out;
    out.a = -p.a;
    out.b = -p.b;
    out.c = -p.c;
    out.d = -p.d;
    out.a1 = p.a1.inv();
    out.a2 = p.a2.inv();
    out.b1 = p.b1.inv() * p.a1.pow(p.a) * p.a2.pow(p.b);
    out.b2 = p.b2.inv() * p.a1.pow(p.c) * p.a2.pow(p.d);
    return out;
}

std::optional<HopfWitness> is_hopf_automorphism(const AutParams& p) {
    if (auto w = respects_relations(p))
        throw AlgebraError("is_hopf_automorphism: candidate breaks relation " + w->relation);
    SigPtr sig = ucheck();
    const char* names[4] = {"K1", "K2", "E1", "E2"};
    for (const char* name : names) {
        Element g = Element::generator(sig, name);
        Element tg = apply(p, g);
        TensorElement lhs = coproduct(tg);
        TensorElement dg = coproduct(g);
        TensorElement rhs(sig);
        for (const auto& [k, c] : dg.terms()) {
            Element left = apply(p, Element::monomial(sig, k.first, c));
            Element right = apply(p, Element::monomial(sig, k.second, Scalar(1)));
            for (const auto& [m1, c1] : left.terms())
                for (const auto& [m2, c2] : right.terms())
                    rhs.add_term(m1, m2, c1 * c2);
        }
        if (lhs != rhs)
            return HopfWitness{name, "coproduct mismatch on " + std::string(name)};
        if (counit(tg) != counit(g))
            return HopfWitness{name, "counit mismatch on " + std::string(name)};
    }
    return std::nullopt;
}

bool ExponentMatrix::nonneg() const {
    return m[0][0] >= 0 && m[0][1] >= 0 && m[1][0] >= 0 && m[1][1] >= 0;
}

ExponentMatrix ExponentMatrix::inverse() const {
    int dt = det();
    if (dt != 1 && dt != -1)
        throw MathError("ExponentMatrix: determinant is not a unit");
    return ExponentMatrix{{{{dt * m[1][1], -dt * m[0][1]}, {-dt * m[1][0], dt * m[0][0]}}}};
}

bool ExponentMatrix::is_permutation() const {
    bool id = m[0][0] == 1 && m[1][1] == 1 && m[0][1] == 0 && m[1][0] == 0;
    bool anti = m[0][0] == 0 && m[1][1] == 0 && m[0][1] == 1 && m[1][0] == 1;
    return id || anti;
}

ExponentMatrix exponent_matrix(const AutParams& p) {
    if (p.swap)
        return ExponentMatrix{{{{0, 1}, {1, 0}}}};
    return ExponentMatrix{{{{1, 0}, {0, 1}}}};
}

std::vector<ExponentMatrix> enumerate_gl2_nonneg(int max_entry) {
    std::vector<ExponentMatrix> out;
    for (int x = 0; x <= max_entry; ++x)
        for (int y = 0; y <= max_entry; ++y)
            for (int z = 0; z <= max_entry; ++z)
                for (int w = 0; w <= max_entry; ++w) {
                    ExponentMatrix m{{{{x, y}, {z, w}}}};
                    int dt = m.det();
                    if (dt != 1 && dt != -1)
                        continue;
                    if (m.inverse().nonneg())
                        out.push_back(m);
                }
    return out;
}

}  // namespace qrs
