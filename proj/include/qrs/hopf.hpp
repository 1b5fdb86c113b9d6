#pragma once

#include <cstdint>
#include <string>

#include "qrs/tensor.hpp"

namespace qrs {

// Hopf structure maps of the augmented algebra (UcheckGE0 preset):
//   coproduct(K_l) = K_l (x) K_l
//   coproduct(E1)  = E1 (x) 1 + K1^2 K2^-1 (x) E1
//   coproduct(E2)  = E2 (x) 1 + K1^-1 K2^2 (x) E2
//   counit(K_l) = 1, counit(E_l) = 0
//   antipode(K_l) = K_l^-1, antipode(E_l) = -(group-like of E_l)^-1 E_l
// E3 images are derived from E3 = E1 E2 - s E2 E1. The antipode images are
// the ones forced by the antipode axiom; verify_hopf_axioms also exposes an
// override hook so the failing variants can be demonstrated.

TensorElement coproduct(const Element& x);
Scalar counit(const Element& x);
Element antipode(const Element& x);
// anti-algebra extension of custom images of E1, E2 (K images stay K^-1)
Element antipode_with_images(const Element& x, const Element& img_e1, const Element& img_e2);

// m(S (x) id) Delta and m(id (x) S) Delta, with S given explicitly
Element antipode_law_left(const Element& x, const Element& img_e1, const Element& img_e2);
Element antipode_law_right(const Element& x, const Element& img_e1, const Element& img_e2);

Tensor3 coproduct_left(const TensorElement& t);   // (Delta (x) id)
Tensor3 coproduct_right(const TensorElement& t);  // (id (x) Delta)
Element counit_left(const TensorElement& t);      // (eps (x) id)
Element counit_right(const TensorElement& t);     // (id (x) eps)

struct HopfReport {
    bool pass = true;
    int cases_checked = 0;
    std::string first_failure;
};

// Coassociativity, counit and antipode laws on every monomial with
// E-degree <= degree_bound and K-exponents in [-1,1]^2, plus seeded random
// elements and multiplicativity of coproduct/counit on random products.
HopfReport verify_hopf_axioms(int degree_bound, uint64_t seed = 20240801);

}  // namespace qrs
