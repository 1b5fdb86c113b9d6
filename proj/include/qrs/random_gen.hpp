#pragma once

#include <random>

#include "qrs/element.hpp"

namespace qrs {

// Seeded generators for property suites. Everything here is deterministic
// given the engine seed, so CI runs are reproducible.

inline Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
    // small rationals times small r,s powers, occasionally a binomial
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> ex(-2, 2);
    std::uniform_int_distribution<int> kind(0, 5);
    for (;;) {
        Scalar x = Scalar(Rational(num(rng), den(rng))) *
                   Scalar::uv_monomial(ex(rng), ex(rng));
        if (kind(rng) == 0)
            x += Scalar(Rational(num(rng))) * Scalar::uv_monomial(ex(rng), ex(rng));
        if (!nonzero || !x.is_zero())
            return x;
    }
}

// Random normal monomial with E-part weighted degree <= degree_bound and
// invertible-generator exponents in [-kbox, kbox].
inline Monomial random_monomial(std::mt19937_64& rng, const AlgebraSignature& sig,
                                int degree_bound, int kbox = 1) {
    Monomial m{std::vector<int32_t>(sig.size(), 0)};
    int budget = degree_bound;
    for (size_t i = 0; i < sig.size(); ++i) {
        const Generator& g = sig.generators()[i];
        if (g.invertible && g.weight == 0) {
            std::uniform_int_distribution<int> d(-kbox, kbox);
            m.exps[i] = d(rng);
        } else if (g.weight > 0) {
            int max_e = budget / g.weight;
            if (g.invertible) {
                std::uniform_int_distribution<int> d(-std::min(max_e, kbox), max_e);
                m.exps[i] = d(rng);
            } else {
                std::uniform_int_distribution<int> d(0, max_e);
                m.exps[i] = d(rng);
            }
            if (m.exps[i] > 0)
                budget -= m.exps[i] * g.weight;
        }
    }
    return m;
}

inline Element random_element(std::mt19937_64& rng, const SigPtr& sig, int degree_bound,
                              int max_terms = 3, int kbox = 1) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    Element x = Element::zero(sig);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        x += Element::monomial(sig, random_monomial(rng, *sig, degree_bound, kbox),
                               random_scalar(rng, /*nonzero=*/true));
    return x;
}

}  // namespace qrs
