#include "qrs/derivations.hpp"

#include <functional>
#include <map>

#include "qrs/errors.hpp"
#include "qrs/linalg.hpp"
#include "qrs/parser.hpp"

namespace qrs {

namespace {

SigPtr uplus() {
    return AlgebraSignature::preset(Preset::Uplus);
}

SigPtr q3() {
    return AlgebraSignature::preset(Preset::Q3);
}

Scalar embed_coeff() {
    // 1/(r-s)
    return (Scalar::r() - Scalar::s()).inv();
}

void require_uplus(const Element& x, const char* op) {
    if (x.signature()->name() != "Uplus")
        throw AlgebraError(std::string(op) + ": defined on Uplus only");
}

// all Uplus monomials of weighted degree <= bound, ascending in the
// monomial order
std::vector<Monomial> uplus_monomials_upto(int bound) {
    SigPtr U = uplus();
    std::vector<Monomial> out;
    for (int j = 0; 2 * j <= bound; ++j)
        for (int i = 0; i + 2 * j <= bound; ++i)
            for (int k = 0; i + 2 * j + k <= bound; ++k)
                out.push_back(Monomial{{i, j, k}});
    MonomialLess less{U.get()};
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return less(a, b);
    });
    return out;
}

}  // namespace

Derivation inner(const Element& t) {
    require_uplus(t, "inner");
    SigPtr U = t.signature();
    Element e1 = Element::generator(U, "E1");
    Element e2 = Element::generator(U, "E2");
    return Derivation{t * e1 - e1 * t, t * e2 - e2 * t};
}

Derivation d1() {
    SigPtr U = uplus();
    return Derivation{Element::generator(U, "E1"), Element::zero(U)};
}

Derivation d2() {
    SigPtr U = uplus();
    return Derivation{Element::zero(U), Element::generator(U, "E2")};
}

Element derivation_e3_image(const Derivation& d) {
    SigPtr U = d.img_e1.signature();
    Element e1 = Element::generator(U, "E1");
    Element e2 = Element::generator(U, "E2");
    Scalar s = Scalar::s();
    return d.img_e1 * e2 + e1 * d.img_e2 - d.img_e2 * e1 * s - e2 * d.img_e1 * s;
}

namespace {

// Leibniz extension over an explicit word in the generators E1, E2.
Element leibniz_on_word(const Derivation& d, const std::vector<int>& word) {
    SigPtr U = d.img_e1.signature();
    Element e1 = Element::generator(U, "E1");
    Element e2 = Element::generator(U, "E2");
    const Element* gens[2] = {&e1, &e2};
    const Element* imgs[2] = {&d.img_e1, &d.img_e2};

    Element out = Element::zero(U);
    for (size_t p = 0; p < word.size(); ++p) {
        Element acc = Element::one(U);
        for (size_t q = 0; q < word.size(); ++q)
            acc = acc * (q == p ? *imgs[word[q]] : *gens[word[q]]);
        out += acc;
    }
    return out;
}

}  // namespace

std::optional<std::string> well_defined_witness(const Derivation& d) {
    require_uplus(d.img_e1, "derivation");
    const Scalar r = Scalar::r(), s = Scalar::s();
    // Serre words: 0 = E1, 1 = E2
    Element s1 = leibniz_on_word(d, {0, 0, 1}) -
                 leibniz_on_word(d, {0, 1, 0}) * (r + s) +
                 leibniz_on_word(d, {1, 0, 0}) * (r * s);
    if (!s1.is_zero())
        return "first Serre relation residue: " + render(s1);
    Element s2 = leibniz_on_word(d, {0, 1, 1}) -
                 leibniz_on_word(d, {1, 0, 1}) * (r + s) +
                 leibniz_on_word(d, {1, 1, 0}) * (r * s);
    if (!s2.is_zero())
        return "second Serre relation residue: " + render(s2);
    return std::nullopt;
}

Element apply_derivation(const Derivation& d, const Element& x) {
    require_uplus(x, "apply_derivation");
    if (auto w = well_defined_witness(d))
        throw MathError("apply_derivation: ill-defined derivation; " + *w);
    SigPtr U = x.signature();
    Element e3img = derivation_e3_image(d);
    const Element imgs[3] = {d.img_e1, e3img, d.img_e2};
    const Element gens[3] = {Element::generator(U, 0), Element::generator(U, 1),
                             Element::generator(U, 2)};

    Element out = Element::zero(U);
    for (const auto& [m, c] : x.terms()) {
        // Leibniz across the unit letters of the PBW word of m
        std::vector<int> units;
        for (size_t g = 0; g < m.exps.size(); ++g)
            for (int i = 0; i < m.exps[g]; ++i)
                units.push_back(int(g));
        for (size_t p = 0; p < units.size(); ++p) {
            Element acc = Element::constant(U, c);
            for (size_t q = 0; q < units.size(); ++q)
                acc = acc * (q == p ? imgs[units[q]] : gens[units[q]]);
            out += acc;
        }
    }
    return out;
}

Element torus_embed(const Element& x) {
    require_uplus(x, "torus_embed");
    SigPtr Q = q3();
    Element t1 = Element::generator(Q, "T1");
    Element t3 = Element::generator(Q, "T3");
    Element ie2 = Element::generator(Q, "T2") +
                  t3 * Element::generator(Q, "T1", -1) * embed_coeff();
    Element out = Element::zero(Q);
    for (const auto& [m, c] : x.terms()) {
        Element acc = Element::constant(Q, c);
        if (m.exps[0])
            acc = acc * t1.pow(m.exps[0]);
        if (m.exps[1])
            acc = acc * t3.pow(m.exps[1]);
        if (m.exps[2])
            acc = acc * ie2.pow(m.exps[2]);
        out += acc;
    }
    return out;
}

EmbeddingReport check_embedding() {
    EmbeddingReport report;
    auto fail = [&](const std::string& what) {
        if (report.pass) {
            report.pass = false;
            report.first_failure = what;
        }
    };
    SigPtr U = uplus();
    const Scalar r = Scalar::r(), s = Scalar::s();

    Element e1 = Element::generator(U, "E1");
    Element e2 = Element::generator(U, "E2");
    Element i1 = torus_embed(e1), i2 = torus_embed(e2);

    // Serre images in Q3 (computed through the free words, not the
    // already-reduced normal forms)
    Element s1 = i1 * i1 * i2 - i1 * i2 * i1 * (r + s) + i2 * i1 * i1 * (r * s);
    report.checks.push_back("first Serre image vanishes in Q3");
    if (!s1.is_zero())
        fail(report.checks.back());
    Element s2 = i1 * i2 * i2 - i2 * i1 * i2 * (r + s) + i2 * i2 * i1 * (r * s);
    report.checks.push_back("second Serre image vanishes in Q3");
    if (!s2.is_zero())
        fail(report.checks.back());

    // T-relations for the T's expanded inside A3
    SigPtr A3 = AlgebraSignature::preset(Preset::A3);
    Element a_e1 = Element::generator(A3, "E1");
    Element a_e2 = Element::generator(A3, "E2");
    Element a_e3 = Element::generator(A3, "E3");
    Element t1 = a_e1;
    Element t2 = a_e2 - a_e3 * Element::generator(A3, "E1", -1) * embed_coeff();
    Element t3 = a_e3;

    report.checks.push_back("T1*T2 = s*T2*T1 in A3 coordinates");
    if (t1 * t2 - t2 * t1 * s != Element::zero(A3))
        fail(report.checks.back());
    report.checks.push_back("T1*T3 = r*T3*T1 in A3 coordinates");
    if (t1 * t3 - t3 * t1 * r != Element::zero(A3))
        fail(report.checks.back());
    report.checks.push_back("T2*T3 = r^-1*T3*T2 in A3 coordinates");
    if (t2 * t3 - t3 * t2 * r.inv() != Element::zero(A3))
        fail(report.checks.back());

    report.checks.push_back("I(1) = 1");
    if (torus_embed(Element::one(U)) != Element::one(q3()))
        fail(report.checks.back());

    report.checks.push_back("I(E1*E2 - s*E2*E1) = T3");
    if (torus_embed(Element::generator(U, "E3")) != Element::generator(q3(), "T3") ||
        i1 * i2 - i2 * i1 * s != Element::generator(q3(), "T3"))
        fail(report.checks.back());
    return report;
}

Element central_apply(const CentralTorusDerivation& delta, const Element& x) {
    if (x.signature()->name() != "Q3")
        throw AlgebraError("central_apply: defined on Q3 only");
    Element out = Element::zero(x.signature());
    for (const auto& [m, c] : x.terms()) {
        Scalar eig = delta.alpha1 * Scalar(m.exps[0]) + delta.alpha2 * Scalar(m.exps[1]) +
                     delta.alpha3 * Scalar(m.exps[2]);
        out += Element::monomial(x.signature(), m, c * eig);
    }
    return out;
}

Element central_action_residue(const CentralTorusDerivation& delta) {
    Element ie2 = torus_embed(Element::generator(uplus(), "E2"));
    return central_apply(delta, ie2) - ie2 * delta.alpha2;
}

namespace {

struct DecomposeSystem {
    std::vector<Monomial> basis;  // unknown t-coefficients (includes the unit)
    ScalarMatrix a;
    std::vector<Scalar> rhs;
    size_t cols = 0;  // basis.size() + 2 (mu1, mu2)
};

DecomposeSystem build_system(const Element& rhs_e1, const Element& rhs_e2, int bound) {
    SigPtr U = uplus();
    DecomposeSystem sys;
    sys.basis = uplus_monomials_upto(bound);
    sys.cols = sys.basis.size() + 2;

    Element e1 = Element::generator(U, "E1");
    Element e2 = Element::generator(U, "E2");

    // row index per (equation block, monomial)
    std::map<std::pair<int, Monomial>, size_t,
             std::function<bool(const std::pair<int, Monomial>&, const std::pair<int, Monomial>&)>>
        row_of([less = MonomialLess{U.get()}](const auto& x, const auto& y) {
            if (x.first != y.first)
                return x.first < y.first;
            return less(x.second, y.second);
        });

    auto row = [&](int block, const Monomial& m) {
        auto it = row_of.find({block, m});
        if (it != row_of.end())
            return it->second;
        size_t idx = sys.a.size();
        row_of.emplace(std::make_pair(block, m), idx);
        sys.a.emplace_back(sys.cols, Scalar(0));
        sys.rhs.emplace_back(0);
        return idx;
    };

    for (size_t col = 0; col < sys.basis.size(); ++col) {
        Element m = Element::monomial(U, sys.basis[col], Scalar(1));
        Element c1 = m * e1 - e1 * m;
        Element c2 = m * e2 - e2 * m;
        for (const auto& [mon, c] : c1.terms())
            sys.a[row(1, mon)][col] += c;
        for (const auto& [mon, c] : c2.terms())
            sys.a[row(2, mon)][col] += c;
    }
    // mu columns
    for (const auto& [mon, c] : e1.terms())
        sys.a[row(1, mon)][sys.basis.size()] += c;
    for (const auto& [mon, c] : e2.terms())
        sys.a[row(2, mon)][sys.basis.size() + 1] += c;
    // right-hand sides
    for (const auto& [mon, c] : rhs_e1.terms())
        sys.rhs[row(1, mon)] += c;
    for (const auto& [mon, c] : rhs_e2.terms())
        sys.rhs[row(2, mon)] += c;
    return sys;
}

}  // namespace

Decomposition decompose(const Derivation& d, int degree_bound) {
    if (auto w = well_defined_witness(d))
        throw MathError("decompose: ill-defined derivation; " + *w);
    int bound = degree_bound;
    if (bound <= 0)
        bound = 2 + std::max(d.img_e1.max_weighted_degree(), d.img_e2.max_weighted_degree());

    DecomposeSystem sys = build_system(d.img_e1, d.img_e2, bound);
    LinearSolution sol = solve_linear(sys.a, sys.rhs);
    if (!sol.consistent)
        throw MathError("decompose: no solution with deg(t) <= " + std::to_string(bound) +
                        "; increase the bound");

    SigPtr U = uplus();
    Decomposition out{Element::zero(U), sol.particular[sys.basis.size()],
                      sol.particular[sys.basis.size() + 1]};
    for (size_t i = 0; i < sys.basis.size(); ++i) {
        if (sys.basis[i].is_unit())
            continue;  // zero-constant normalization
        out.t += Element::monomial(U, sys.basis[i], sol.particular[i]);
    }

    // reconstruction identity (internal consistency)
    Derivation rebuilt = inner(out.t);
    rebuilt.img_e1 += Element::generator(U, "E1") * out.mu1;
    rebuilt.img_e2 += Element::generator(U, "E2") * out.mu2;
    if (rebuilt.img_e1 != d.img_e1 || rebuilt.img_e2 != d.img_e2)
        throw MathError("decompose: reconstruction failed");
    return out;
}

KernelProbe decompose_kernel(int degree_bound) {
    SigPtr U = uplus();
    DecomposeSystem sys =
        build_system(Element::zero(U), Element::zero(U), degree_bound);
    LinearSolution sol = solve_linear(sys.a, sys.rhs);

    KernelProbe probe;
    probe.dimension = sol.kernel.size();
    probe.constant_only = true;
    for (const auto& vec : sol.kernel) {
        for (size_t i = 0; i < sys.basis.size(); ++i)
            if (!vec[i].is_zero() && !sys.basis[i].is_unit())
                probe.constant_only = false;
        if (!vec[sys.basis.size()].is_zero() || !vec[sys.basis.size() + 1].is_zero())
            probe.constant_only = false;  // some mu1 D1 + mu2 D2 became inner
    }
    return probe;
}

std::vector<Element> center_probe(int degree_bound) {
    SigPtr U = uplus();
    std::vector<Monomial> basis = uplus_monomials_upto(degree_bound);
    Element e1 = Element::generator(U, "E1");
    Element e2 = Element::generator(U, "E2");

    std::map<std::pair<int, Monomial>, size_t,
             std::function<bool(const std::pair<int, Monomial>&, const std::pair<int, Monomial>&)>>
        row_of([less = MonomialLess{U.get()}](const auto& x, const auto& y) {
            if (x.first != y.first)
                return x.first < y.first;
            return less(x.second, y.second);
        });
    ScalarMatrix a;
    auto row = [&](int block, const Monomial& m) {
        auto it = row_of.find({block, m});
        if (it != row_of.end())
            return it->second;
        size_t idx = a.size();
        row_of.emplace(std::make_pair(block, m), idx);
        a.emplace_back(basis.size(), Scalar(0));
        return idx;
    };
    for (size_t col = 0; col < basis.size(); ++col) {
        Element m = Element::monomial(U, basis[col], Scalar(1));
        Element c1 = m * e1 - e1 * m;
        Element c2 = m * e2 - e2 * m;
        for (const auto& [mon, c] : c1.terms())
            a[row(1, mon)][col] += c;
        for (const auto& [mon, c] : c2.terms())
            a[row(2, mon)][col] += c;
    }
    LinearSolution sol = solve_linear(a, std::vector<Scalar>(a.size(), Scalar(0)));

    std::vector<Element> out;
    for (const auto& vec : sol.kernel) {
        Element z = Element::zero(U);
        for (size_t i = 0; i < basis.size(); ++i)
            z += Element::monomial(U, basis[i], vec[i]);
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<Monomial> center_probe_torus(int box) {
    SigPtr Q = q3();
    std::vector<Monomial> central;
    for (int i = -box; i <= box; ++i)
        for (int j = -box; j <= box; ++j)
            for (int k = -box; k <= box; ++k) {
                Monomial m{{i, j, k}};
                Element x = Element::monomial(Q, m, Scalar(1));
                bool commutes = true;
                for (int g = 0; g < 3 && commutes; ++g) {
                    Element t = Element::generator(Q, g);
                    if (x * t != t * x)
                        commutes = false;
                }
                if (commutes)
                    central.push_back(m);
            }
    return central;
}

}  // namespace qrs
