#include "qrs/element.hpp"

#include <algorithm>
#include <sstream>

#include "qrs/errors.hpp"

namespace qrs {

bool Monomial::is_unit() const {
    for (int32_t e : exps)
        if (e != 0)
            return false;
    return true;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = sig->weighted_degree(a.exps), db = sig->weighted_degree(b.exps);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(),
                                        b.exps.end());
}

Element::Element(SigPtr sig) : sig_(std::move(sig)), terms_(MonomialLess{sig_.get()}) {}

Element Element::constant(SigPtr sig, Scalar c) {
    Element x(std::move(sig));
    if (!c.is_zero())
        x.terms_.emplace(Monomial{std::vector<int32_t>(x.sig_->size(), 0)}, std::move(c));
    return x;
}

Element Element::generator(SigPtr sig, int pos, int32_t exp) {
    Element x(std::move(sig));
    if (pos < 0 || size_t(pos) >= x.sig_->size())
        throw AlgebraError("generator: position out of range");
    Monomial m{std::vector<int32_t>(x.sig_->size(), 0)};
    m.exps[pos] = exp;
    return monomial(x.sig_, std::move(m), Scalar(1));
}

Element Element::generator(SigPtr sig, std::string_view name, int32_t exp) {
    int pos = sig->index_of(name);
    if (pos < 0)
        throw AlgebraError("generator: unknown name " + std::string(name));
    return generator(std::move(sig), pos, exp);
}

Element Element::monomial(SigPtr sig, Monomial m, Scalar c) {
    if (m.exps.size() != sig->size())
        throw AlgebraError("monomial: exponent vector has wrong length");
    for (size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] < 0 && !sig->generators()[i].invertible)
            throw AlgebraError("monomial: negative exponent of non-invertible generator " +
                               sig->generators()[i].name);
    Element x(std::move(sig));
    if (!c.is_zero())
        x.terms_.emplace(std::move(m), std::move(c));
    return x;
}

bool Element::is_scalar() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Scalar Element::scalar_value() const {
    if (terms_.empty())
        return Scalar(0);
    if (!is_scalar())
        throw AlgebraError("scalar_value: element is not a scalar");
    return terms_.begin()->second;
}

Scalar Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

namespace {

void require_same_signature(const Element& a, const Element& b) {
    if (a.signature().get() != b.signature().get() &&
        a.signature()->name() != b.signature()->name())
        throw AlgebraError("signature mismatch: " + a.signature()->name() + " vs " +
                           b.signature()->name());
}

}  // namespace

Element Element::operator+(const Element& o) const {
    require_same_signature(*this, o);
    Element out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, c);
    return out;
}

Element Element::operator-(const Element& o) const {
    return *this + (-o);
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Element Element::operator*(const Scalar& c) const {
    if (c.is_zero())
        return Element(sig_);
    Element out = *this;
    for (auto& [m, k] : out.terms_)
        k *= c;
    return out;
}

Word word_of_monomial(const AlgebraSignature& sig, const Monomial& m) {
    Word w;
    for (size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] != 0)
            w.push_back({int32_t(i), m.exps[i]});
    (void)sig;
    return w;
}

namespace {

// Merge adjacent runs of the same generator; drop zero exponents.
void merge_runs(Word& w) {
    size_t out = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (out > 0 && w[out - 1].first == w[i].first) {
            w[out - 1].second += w[i].second;
            if (w[out - 1].second == 0)
                --out;
        } else if (w[i].second != 0) {
            w[out++] = w[i];
        }
    }
    w.resize(out);
}

Monomial monomial_of_word(const AlgebraSignature& sig, const Word& w) {
    Monomial m{std::vector<int32_t>(sig.size(), 0)};
    for (const auto& [g, e] : w) {
        m.exps[g] += e;
        if (m.exps[g] < 0 && !sig.generators()[g].invertible)
            throw AlgebraError("normal form: negative exponent of non-invertible generator " +
                               sig.generators()[g].name);
    }
    return m;
}

Word tail_letters(const std::vector<int32_t>& exps) {
    Word w;
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0)
            w.push_back({int32_t(i), exps[i]});
    return w;
}

// The rewriting frontier: words pending normalization, merged by identity
// so that confluent paths recombine early.
using Frontier = std::map<Word, Scalar>;

void frontier_add(Frontier& f, Word w, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = f.find(w);
    if (it == f.end()) {
        f.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            f.erase(it);
    }
}

}  // namespace

Element normalize_words(SigPtr sig, const std::vector<std::pair<Scalar, Word>>& words) {
    const AlgebraSignature& S = *sig;
    Element result(sig);
    Frontier frontier;
    for (const auto& [c, w] : words) {
        Word mw = w;
        merge_runs(mw);
        frontier_add(frontier, std::move(mw), c);
    }

    while (!frontier.empty()) {
        Frontier next;
        for (auto& [w, c] : frontier) {
            // leftmost out-of-order adjacent pair
            size_t pos = w.size();
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i].first > w[i + 1].first) {
                    pos = i;
                    break;
                }
            }
            if (pos == w.size()) {
                result.add_term(monomial_of_word(S, w), c);
                continue;
            }

            auto [hi, ehi] = w[pos];
            auto [lo, elo] = w[pos + 1];
            const RewriteRule& rule = S.rule(hi, lo);

            if (rule.tail.empty()) {
                // pure q-commutation swaps whole runs at once
                Word nw = w;
                std::swap(nw[pos], nw[pos + 1]);
                merge_runs(nw);
                frontier_add(next, std::move(nw),
                             c * rule.q.pow(int64_t(ehi) * int64_t(elo)));
                continue;
            }

            // Tailed rule: peel one unit of the hi run against one signed
            // unit of the lo run. In every preset the tailed pair has a
            // non-invertible hi generator, so ehi > 0 here.
            if (ehi < 0)
                throw AlgebraError("normal form: tailed rule against inverted generator");
            int slo = elo > 0 ? 1 : -1;

            auto emit = [&](const Word& mid, const Scalar& factor) {
                Word nw;
                nw.reserve(w.size() + mid.size() + 2);
                nw.insert(nw.end(), w.begin(), w.begin() + pos);
                if (ehi - 1 != 0)
                    nw.push_back({hi, ehi - 1});
                nw.insert(nw.end(), mid.begin(), mid.end());
                if (elo - slo != 0)
                    nw.push_back({lo, elo - slo});
                nw.insert(nw.end(), w.begin() + pos + 2, w.end());
                merge_runs(nw);
                frontier_add(next, std::move(nw), c * factor);
            };

            if (slo > 0) {
                // g_hi g_lo = q g_lo g_hi + t
                emit({{lo, 1}, {hi, 1}}, rule.q);
                for (const auto& [tc, texps] : rule.tail)
                    emit(tail_letters(texps), tc);
            } else {
                // g_hi g_lo^-1 = q^-1 g_lo^-1 g_hi - q^-1 g_lo^-1 t g_lo^-1
                Scalar qi = rule.q.inv();
                emit({{lo, -1}, {hi, 1}}, qi);
                for (const auto& [tc, texps] : rule.tail) {
                    Word mid;
                    mid.push_back({lo, -1});
                    Word tl = tail_letters(texps);
                    mid.insert(mid.end(), tl.begin(), tl.end());
                    mid.push_back({lo, -1});
                    emit(mid, -(qi * tc));
                }
            }
        }
        frontier = std::move(next);
    }
    return result;
}

Element Element::from_word(SigPtr sig, const Word& w, Scalar coeff) {
    return normalize_words(std::move(sig), {{std::move(coeff), w}});
}

Element normal_form(const Element& x) {
    std::vector<std::pair<Scalar, Word>> words;
    words.reserve(x.term_count());
    for (const auto& [m, c] : x.terms())
        words.push_back({c, word_of_monomial(*x.signature(), m)});
    return normalize_words(x.signature(), words);
}

Element Element::operator*(const Element& o) const {
    require_same_signature(*this, o);
    std::vector<std::pair<Scalar, Word>> words;
    words.reserve(terms_.size() * o.terms_.size());
    for (const auto& [m1, c1] : terms_) {
        Word w1 = word_of_monomial(*sig_, m1);
        for (const auto& [m2, c2] : o.terms_) {
            Word w = w1;
            Word w2 = word_of_monomial(*sig_, m2);
            w.insert(w.end(), w2.begin(), w2.end());
            words.push_back({c1 * c2, std::move(w)});
        }
    }
    return normalize_words(sig_, words);
}

Element Element::pow(int n) const {
    if (n == 0)
        return one(sig_);
    if (n < 0)
        return monomial_inverse().pow(-n);
    Element acc = one(sig_);
    Element base = *this;
    unsigned k = unsigned(n);
    while (k) {
        if (k & 1)
            acc = acc * base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return acc;
}

Element Element::monomial_inverse() const {
    if (terms_.size() != 1)
        throw AlgebraError("inverse: element is not a monomial");
    const auto& [m, c] = *terms_.begin();
    for (size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] != 0 && !sig_->generators()[i].invertible)
            throw AlgebraError("inverse: non-invertible generator " +
                               sig_->generators()[i].name + " in support");
    // (g1^e1 ... gk^ek)^-1 = gk^-ek ... g1^-e1, then reorder
    Word w = word_of_monomial(*sig_, m);
    std::reverse(w.begin(), w.end());
    for (auto& [g, e] : w)
        e = -e;
    return from_word(sig_, w, c.inv());
}

bool Element::operator==(const Element& o) const {
    if (sig_->name() != o.sig_->name())
        return false;
    if (terms_.size() != o.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second)
            return false;
    return true;
}

int Element::max_weighted_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, sig_->weighted_degree(m.exps));
    return d;
}

Element Element::promoted(const SigPtr& target) const {
    int src = sig_->chain_rank(), dst = target->chain_rank();
    if (target->name() == "Q3")
        throw AlgebraError(
            "promoted: Q3 uses torus coordinates; apply the embedding instead");
    if (src < 0 || dst < 0 || dst < src || !sig_->same_generators(*target))
        throw AlgebraError("promoted: " + sig_->name() + " -> " + target->name() +
                           " is not a localization step");
    Element out(target);
    for (const auto& [m, c] : terms_)
        out.add_term(m, c);
    return out;
}

std::optional<Element> try_right_inverse(const Element& x, int max_steps) {
    if (x.is_zero())
        return std::nullopt;
    const SigPtr& sig = x.signature();
    const auto& [lmx, lcx] = *x.terms().rbegin();

    Element y = Element::zero(sig);
    Element rem = Element::one(sig);
    for (int step = 0; step < max_steps; ++step) {
        if (rem.is_zero())
            return y;
        const auto& [m, c] = *rem.terms().rbegin();
        // the only candidate cancelling lm(rem) is lm(x)^-1 * m
        Monomial n{m.exps};
        for (size_t i = 0; i < n.exps.size(); ++i) {
            n.exps[i] -= lmx.exps[i];
            if (n.exps[i] < 0 && !sig->generators()[i].invertible)
                return std::nullopt;  // no inverse exists
        }
        Element cand = Element::monomial(sig, n, Scalar(1));
        Element prod = x * cand;
        Scalar lead = prod.coeff(m);
        if (lead.is_zero())
            throw AlgebraError("try_right_inverse: leading term did not multiply");
        Scalar d = c / lead;
        y = y + cand * d;
        rem = rem - prod * d;
    }
    return std::nullopt;  // budget exhausted (inconclusive)
}

long graded_dimension(int d) {
    if (d < 0)
        return 0;
    long count = 0;
    for (int j = 0; 2 * j <= d; ++j)
        count += d - 2 * j + 1;  // choices of (i,k) with i+k = d-2j
    return count;
}

SkewReport verify_skew_presentation(int degree_bound) {
    SkewReport report;
    SigPtr U = AlgebraSignature::preset(Preset::Uplus);
    const Scalar r = Scalar::r(), s = Scalar::s();
    Element E1 = Element::generator(U, "E1");
    Element E2 = Element::generator(U, "E2");
    Element E3 = Element::generator(U, "E3");

    auto fail = [&](const std::string& what) {
        if (report.pass) {
            report.pass = false;
            report.first_failure = what;
        }
    };

    // Layer E3 over C[E1]:  E3 * E1^i = tau2(E1^i) * E3 + delta2(E1^i),
    // tau2(E1) = r^-1 E1, delta2 = 0.
    for (int i = 0; i <= degree_bound; ++i) {
        Element a = E1.pow(i);
        Element lhs = E3 * a;
        Element rhs = a * r.pow(-i) * E3;
        ++report.cases_checked;
        if (lhs != rhs)
            fail("E3 layer at E1^" + std::to_string(i));
    }

    // Layer E2 over C[E1][E3]: E2 * a = tau3(a) * E2 + delta3(a) with
    // tau3(E1) = s^-1 E1, tau3(E3) = r^-1 E3, delta3(E1) = -s^-1 E3,
    // delta3(E3) = 0, extended by delta3(ab) = delta3(a) b + tau3(a) delta3(b).
    // On E1^i E3^j that gives delta3(E1^i) E3^j with
    // delta3(E1^i) = sum_{k=0..i-1} s^-k E1^k (-s^-1 E3) E1^(i-1-k).
    for (int i = 0; i <= degree_bound; ++i) {
        for (int j = 0; i + 2 * j <= degree_bound; ++j) {
            Element a = E1.pow(i) * E3.pow(j);
            Element tau = a * (s.pow(-i) * r.pow(-j));
            Element delta = Element::zero(U);
            for (int k = 0; k < i; ++k)
                delta += E1.pow(k) * E3 * E1.pow(i - 1 - k) * (s.pow(-k) * (-s.inv()));
            delta = delta * E3.pow(j);
            Element lhs = E2 * a;
            Element rhs = tau * E2 + delta;
            ++report.cases_checked;
            if (lhs != rhs)
                fail("E2 layer at E1^" + std::to_string(i) + " E3^" + std::to_string(j));
        }
    }
    return report;
}

}  // namespace qrs
