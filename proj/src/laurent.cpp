#include "qrs/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qrs {

namespace {

bool term_less(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    if (a.eu != b.eu)
        return a.eu < b.eu;
    return a.ev < b.ev;
}

// graded-lex order used for leading-term extraction
bool glex_less(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    int64_t da = int64_t(a.eu) + a.ev, db = int64_t(b.eu) + b.ev;
    if (da != db)
        return da < db;
    if (a.eu != b.eu)
        return a.eu < b.eu;
    return a.ev < b.ev;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const Rational& c) {
    return monomial(0, 0, c);
}

LaurentPoly LaurentPoly::monomial(int32_t eu, int32_t ev, const Rational& c) {
    LaurentPoly p;
    if (c != 0)
        p.terms_.push_back({eu, ev, c});
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].eu == 0 && terms_[0].ev == 0 && terms_[0].c == 1;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_[0].eu == 0 && terms_[0].ev == 0;
}

int32_t LaurentPoly::min_eu() const {
    int32_t m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.eu < m)
            m = t.eu;
        first = false;
    }
    return m;
}

int32_t LaurentPoly::min_ev() const {
    int32_t m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.ev < m)
            m = t.ev;
        first = false;
    }
    return m;
}

int32_t LaurentPoly::max_eu() const {
    int32_t m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.eu > m)
            m = t.eu;
        first = false;
    }
    return m;
}

int32_t LaurentPoly::max_ev() const {
    int32_t m = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.ev > m)
            m = t.ev;
        first = false;
    }
    return m;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (term_less(terms_[i], o.terms_[j])) {
            out.terms_.push_back(terms_[i++]);
        } else if (term_less(o.terms_[j], terms_[i])) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].c + o.terms_[j].c;
            if (c != 0)
                out.terms_.push_back({terms_[i].eu, terms_[i].ev, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        out.terms_.push_back(o.terms_[j]);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_)
        t.c = -t.c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int32_t du, int32_t dv, const Rational& c) const {
    if (c == 0)
        return LaurentPoly();
    LaurentPoly out = *this;
    for (auto& t : out.terms_) {
        t.eu += du;
        t.ev += dv;
        if (c != 1)
            t.c *= c;
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    return shifted(0, 0, c);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero())
        return LaurentPoly();
    if (is_monomial())
        return o.shifted(terms_[0].eu, terms_[0].ev, terms_[0].c);
    if (o.is_monomial())
        return shifted(o.terms_[0].eu, o.terms_[0].ev, o.terms_[0].c);

    std::map<std::pair<int32_t, int32_t>, Rational> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc[{a.eu + b.eu, a.ev + b.ev}] += a.c * b.c;
    LaurentPoly out;
    out.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0)
            out.terms_.push_back({e.first, e.second, std::move(c)});
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].eu != o.terms_[i].eu || terms_[i].ev != o.terms_[i].ev ||
            terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

const LaurentPoly::Term& LaurentPoly::leading_term() const {
    if (terms_.empty())
        throw MathError("leading_term of zero polynomial");
    return *std::max_element(terms_.begin(), terms_.end(), glex_less);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> raw) {
    std::map<std::pair<int32_t, int32_t>, Rational> acc;
    for (auto& t : raw)
        acc[{t.eu, t.ev}] += t.c;
    LaurentPoly out;
    for (auto& [e, c] : acc)
        if (c != 0)
            out.terms_.push_back({e.first, e.second, std::move(c)});
    return out;
}

std::string LaurentPoly::debug_str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << " + ";
        os << t.c.str() << "*u^" << t.eu << "*v^" << t.ev;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact division (sparse, graded-lex leading-term elimination).

namespace {

struct GlexKey {
    int32_t eu, ev;
    bool operator<(const GlexKey& o) const {
        int64_t d = int64_t(eu) + ev, od = int64_t(o.eu) + o.ev;
        if (d != od)
            return d < od;
        if (eu != o.eu)
            return eu < o.eu;
        return ev < o.ev;
    }
};

}  // namespace

LaurentPoly laurent_div_exact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero())
        throw MathError("laurent_div_exact: division by zero");
    if (f.is_zero())
        return LaurentPoly();
    if (g.is_monomial()) {
        const auto& m = g.terms()[0];
        return f.shifted(-m.eu, -m.ev, Rational(1) / m.c);
    }
    const auto& glead = g.leading_term();

    std::map<GlexKey, Rational> rem;
    for (const auto& t : f.terms())
        rem[{t.eu, t.ev}] = t.c;

    std::vector<LaurentPoly::Term> quot;
    while (!rem.empty()) {
        auto lead = std::prev(rem.end());
        int32_t qu = lead->first.eu - glead.eu;
        int32_t qv = lead->first.ev - glead.ev;
        if (qu < 0 || qv < 0)
            throw MathError("laurent_div_exact: inexact division");
        Rational qc = lead->second / glead.c;
        quot.push_back({qu, qv, qc});
        for (const auto& t : g.terms()) {
            GlexKey key{t.eu + qu, t.ev + qv};
            auto it = rem.find(key);
            Rational delta = t.c * qc;
            if (it == rem.end()) {
                if (delta != 0)
                    rem.emplace(key, -delta);
            } else {
                it->second -= delta;
                if (it->second == 0)
                    rem.erase(it);
            }
        }
    }
    return LaurentPoly::from_terms(std::move(quot));
}

namespace {

bool divides(const LaurentPoly& g, const LaurentPoly& f, LaurentPoly* quotient = nullptr) {
    if (g.max_eu() > f.max_eu() || g.max_ev() > f.max_ev())
        return false;
    try {
        LaurentPoly q = laurent_div_exact(f, g);
        if (quotient)
            *quotient = std::move(q);
        return true;
    } catch (const MathError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Univariate helpers over Q (dense, index = degree).

using UPoly = std::vector<Rational>;

void u_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty())
        return {};
    UPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    u_trim(out);
    return out;
}

UPoly u_rem(UPoly a, const UPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= q * b[i];
        u_trim(a);
    }
    return a;
}

UPoly u_div_exact(UPoly a, const UPoly& b) {
    if (b.empty())
        throw MathError("u_div_exact: division by zero");
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= c * b[i];
        u_trim(a);
    }
    if (!a.empty())
        throw MathError("u_div_exact: inexact division");
    u_trim(q);
    return q;
}

UPoly u_monic(UPoly a) {
    if (a.empty())
        return a;
    Rational lc = a.back();
    for (auto& c : a)
        c /= lc;
    return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = u_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return u_monic(std::move(a));
}

Rational u_eval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

// ---------------------------------------------------------------------------
// Views of a bivariate polynomial: dense coefficients in one variable.

// coefficient UPolys (in u) per v-degree
std::vector<UPoly> v_slices(const LaurentPoly& p) {
    std::vector<UPoly> out;
    for (const auto& t : p.terms()) {
        if (t.eu < 0 || t.ev < 0)
            throw MathError("laurent_gcd: negative exponent");
        if (out.size() <= size_t(t.ev))
            out.resize(t.ev + 1);
        UPoly& c = out[t.ev];
        if (c.size() <= size_t(t.eu))
            c.resize(t.eu + 1);
        c[t.eu] = t.c;
    }
    for (auto& c : out)
        u_trim(c);
    while (!out.empty() && out.back().empty())
        out.pop_back();
    return out;
}

LaurentPoly from_v_slices(const std::vector<UPoly>& p) {
    std::vector<LaurentPoly::Term> terms;
    for (size_t ev = 0; ev < p.size(); ++ev)
        for (size_t eu = 0; eu < p[ev].size(); ++eu)
            if (p[ev][eu] != 0)
                terms.push_back({int32_t(eu), int32_t(ev), p[ev][eu]});
    return LaurentPoly::from_terms(std::move(terms));
}

UPoly content_u(const LaurentPoly& p) {
    UPoly g;
    for (const auto& slice : v_slices(p))
        if (!slice.empty())
            g = u_gcd(g, slice);
    return g;
}

// p(x, v) for fixed rational x, as a polynomial in v (same layout as UPoly)
UPoly eval_u_at(const LaurentPoly& p, const Rational& x) {
    UPoly out;
    for (const auto& t : p.terms()) {
        if (out.size() <= size_t(t.ev))
            out.resize(t.ev + 1);
        out[t.ev] += t.c * rational_pow(x, t.eu);
    }
    u_trim(out);
    return out;
}

UPoly eval_v_at(const LaurentPoly& p, const Rational& x) {
    UPoly out;
    for (const auto& t : p.terms()) {
        if (out.size() <= size_t(t.eu))
            out.resize(t.eu + 1);
        out[t.eu] += t.c * rational_pow(x, t.ev);
    }
    u_trim(out);
    return out;
}

// Sound coprimality certificate by evaluation. Returns true only with a
// proof: if the leading coefficient (as a polynomial in the evaluated
// variable) survives the substitution, every common divisor keeps its
// degree, so a trivial specialized gcd rules out common divisors involving
// that variable. Returns false when inconclusive.
bool certified_coprime(const LaurentPoly& f, const LaurentPoly& g) {
    static const Rational probes[] = {Rational(2),     Rational(3),     Rational(5),
                                      Rational(7, 2),  Rational(11, 3), Rational(13, 5)};
    // rule out common divisors with positive v-degree: evaluate u
    auto rule_out = [&](bool eval_u) {
        auto lead_slice = [&](const LaurentPoly& p) {
            // coefficient of the top power of the kept variable, as a poly
            // in the evaluated variable
            UPoly lead;
            int32_t top = eval_u ? p.max_ev() : p.max_eu();
            for (const auto& t : p.terms()) {
                int32_t kept = eval_u ? t.ev : t.eu;
                int32_t other = eval_u ? t.eu : t.ev;
                if (kept != top)
                    continue;
                if (lead.size() <= size_t(other))
                    lead.resize(other + 1);
                lead[other] = t.c;
            }
            u_trim(lead);
            return lead;
        };
        UPoly lf = lead_slice(f), lg = lead_slice(g);
        for (const Rational& x : probes) {
            if (u_eval(lf, x) == 0 || u_eval(lg, x) == 0)
                continue;
            UPoly fe = eval_u ? eval_u_at(f, x) : eval_v_at(f, x);
            UPoly ge = eval_u ? eval_u_at(g, x) : eval_v_at(g, x);
            UPoly h = u_gcd(fe, ge);
            return h.size() <= 1;  // certified iff the specialized gcd is constant
        }
        return false;  // no usable probe
    };
    return rule_out(true) && rule_out(false);
}

// ---------------------------------------------------------------------------
// Fallback gcd: monic Euclid in Q(u)[v] with reduced rational-function
// coefficients, plus content bookkeeping.

struct RatU {
    UPoly n;             // numerator
    UPoly d{Rational(1)};  // denominator, monic, nonzero

    bool is_zero() const { return n.empty(); }
};

RatU ratu_make(UPoly n, UPoly d) {
    if (d.empty())
        throw MathError("RatU: zero denominator");
    if (n.empty())
        return RatU{};
    UPoly g = u_gcd(n, d);
    if (g.size() > 1) {
        n = u_div_exact(std::move(n), g);
        d = u_div_exact(std::move(d), g);
    }
    Rational lc = d.back();
    if (lc != 1) {
        for (auto& c : n)
            c /= lc;
        for (auto& c : d)
            c /= lc;
    }
    return RatU{std::move(n), std::move(d)};
}

RatU ratu_mul(const RatU& a, const RatU& b) {
    if (a.is_zero() || b.is_zero())
        return RatU{};
    return ratu_make(u_mul(a.n, b.n), u_mul(a.d, b.d));
}

RatU ratu_div(const RatU& a, const RatU& b) {
    if (b.is_zero())
        throw MathError("RatU: division by zero");
    if (a.is_zero())
        return RatU{};
    return ratu_make(u_mul(a.n, b.d), u_mul(a.d, b.n));
}

RatU ratu_sub(const RatU& a, const RatU& b) {
    if (b.is_zero())
        return a;
    if (a.is_zero()) {
        RatU out = b;
        for (auto& c : out.n)
            c = -c;
        return out;
    }
    UPoly n = u_mul(a.n, b.d);
    UPoly m = u_mul(b.n, a.d);
    if (n.size() < m.size())
        n.resize(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        n[i] -= m[i];
    u_trim(n);
    return ratu_make(std::move(n), u_mul(a.d, b.d));
}

using VPolyR = std::vector<RatU>;  // dense in v over Q(u)

void vr_trim(VPolyR& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

VPolyR vr_from_slices(const std::vector<UPoly>& slices) {
    VPolyR out;
    out.reserve(slices.size());
    for (const auto& s : slices)
        out.push_back(RatU{s, UPoly{Rational(1)}});
    vr_trim(out);
    return out;
}

void vr_make_monic(VPolyR& p) {
    if (p.empty())
        return;
    RatU lead = p.back();
    for (auto& c : p)
        c = ratu_div(c, lead);
}

VPolyR vr_mod(VPolyR a, const VPolyR& b_monic) {
    while (a.size() >= b_monic.size() && !a.empty()) {
        RatU q = a.back();
        size_t shift = a.size() - b_monic.size();
        for (size_t i = 0; i + 1 < b_monic.size(); ++i)
            a[i + shift] = ratu_sub(a[i + shift], ratu_mul(q, b_monic[i]));
        a.pop_back();
        vr_trim(a);
    }
    return a;
}

// gcd of the primitive parts via field Euclid, returned as a primitive
// polynomial in Q[u][v]
LaurentPoly field_euclid_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    VPolyR a = vr_from_slices(v_slices(f));
    VPolyR b = vr_from_slices(v_slices(g));
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty()) {
        vr_make_monic(b);
        VPolyR r = vr_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    vr_make_monic(a);
    // clear denominators: multiply by the lcm of the coefficient denominators
    UPoly lcm{Rational(1)};
    for (const auto& c : a)
        if (!c.is_zero())
            lcm = u_div_exact(u_mul(lcm, c.d), u_gcd(lcm, c.d));
    std::vector<UPoly> slices(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            slices[i] = u_mul(a[i].n, u_div_exact(lcm, a[i].d));
    LaurentPoly cleared = from_v_slices(slices);
    // primitive part in u
    UPoly cont = content_u(cleared);
    if (cont.size() > 1) {
        std::vector<UPoly> reduced;
        for (auto& s : v_slices(cleared))
            reduced.push_back(s.empty() ? UPoly{} : u_div_exact(s, cont));
        cleared = from_v_slices(reduced);
    }
    return cleared;
}

LaurentPoly monic_glex(const LaurentPoly& p) {
    if (p.is_zero())
        return p;
    return p.scaled(Rational(1) / p.leading_term().c);
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() && g.is_zero())
        return LaurentPoly();
    if (f.is_zero())
        return monic_glex(g);
    if (g.is_zero())
        return monic_glex(f);

    // gcd with a monomial is the monomial of shared minimal exponents
    if (f.is_monomial() || g.is_monomial()) {
        const LaurentPoly& m = f.is_monomial() ? f : g;
        const LaurentPoly& p = f.is_monomial() ? g : f;
        int32_t eu = std::min(m.terms()[0].eu, p.min_eu());
        int32_t ev = std::min(m.terms()[0].ev, p.min_ev());
        return LaurentPoly::monomial(eu, ev, Rational(1));
    }

    // perfect-division shortcuts cover the frequent power-of-a-binomial case
    if (divides(g, f))
        return monic_glex(g);
    if (divides(f, g))
        return monic_glex(f);

    // split off monomial and univariate content
    int32_t sh_u = std::min(f.min_eu(), g.min_eu());
    int32_t sh_v = std::min(f.min_ev(), g.min_ev());
    LaurentPoly fs = f.shifted(-f.min_eu(), -f.min_ev());
    LaurentPoly gs = g.shifted(-g.min_eu(), -g.min_ev());

    UPoly cf = content_u(fs), cg = content_u(gs);
    UPoly c = u_gcd(cf, cg);
    if (cf.size() > 1)
        fs = laurent_div_exact(fs, from_v_slices({cf}));
    if (cg.size() > 1)
        gs = laurent_div_exact(gs, from_v_slices({cg}));

    LaurentPoly result;
    if (fs.is_one() || gs.is_one() || certified_coprime(fs, gs)) {
        result = LaurentPoly::one();
    } else {
        result = field_euclid_gcd(fs, gs);
    }
    result = result * from_v_slices({c});
    result = result.shifted(sh_u, sh_v);
    return monic_glex(result);
}

}  // namespace qrs
