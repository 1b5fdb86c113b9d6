#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrs/element.hpp"

namespace qrs {

// Derivation of the positive part (Uplus), given by generator images.
// The E3 image is determined by E3 = E1E2 - sE2E1:
//   D(E3) = D(E1)E2 + E1 D(E2) - s D(E2) E1 - s E2 D(E1).
struct Derivation {
    Element img_e1;
    Element img_e2;
};

Derivation inner(const Element& t);  // x -> tx - xt
Derivation d1();                     // E1 -> E1, E2 -> 0 (then E3 -> E3)
Derivation d2();                     // E1 -> 0, E2 -> E2 (then E3 -> E3)

Element derivation_e3_image(const Derivation& d);

// Leibniz failure on a Serre relation, rendered; nullopt when well-defined.
std::optional<std::string> well_defined_witness(const Derivation& d);

// Linear Leibniz extension; throws MathError when d is ill-defined.
Element apply_derivation(const Derivation& d, const Element& x);

// The quantum-torus embedding I : Uplus -> Q3,
//   I(E1) = T1, I(E2) = T2 + (1/(r-s)) T3 T1^-1, I(E3) = T3.
Element torus_embed(const Element& x);

struct EmbeddingReport {
    bool pass = true;
    std::vector<std::string> checks;  // one line per verified identity
    std::string first_failure;
};

// Serre images vanish in Q3; the three T-relations hold for the T's
// expanded in A3 coordinates (T2 = E2 - (1/(r-s)) E3 E1^-1); I(1) = 1.
EmbeddingReport check_embedding();

// Central derivation of the torus: delta(T_i) = alpha_i T_i.
struct CentralTorusDerivation {
    Scalar alpha1, alpha2, alpha3;
};

// Diagonal action on a Q3 element.
Element central_apply(const CentralTorusDerivation& delta, const Element& x);

// delta(I(E2)) - alpha2 * I(E2); equals
// ((alpha3-alpha1-alpha2)/(r-s)) T3 T1^-1 and vanishes iff
// alpha3 = alpha1 + alpha2.
Element central_action_residue(const CentralTorusDerivation& delta);

// D = ad_t + mu1 D1 + mu2 D2 with t normalized to zero constant term.
struct Decomposition {
    Element t;
    Scalar mu1, mu2;
};

// Solves for (t, mu1, mu2) with weighted deg(t) <= degree_bound by exact
// linear algebra; throws MathError when no solution exists at the bound or
// when d is ill-defined. degree_bound <= 0 selects the default
// 2 + max deg(D(E1), D(E2)).
Decomposition decompose(const Derivation& d, int degree_bound = 0);

struct KernelProbe {
    size_t dimension = 0;
    bool constant_only = false;  // kernel = span{constant part of t}
};

// Kernel of the homogeneous decomposition system at the given bound; the
// expected answer (dimension 1, the constant) is the computational witness
// that no combination mu1 D1 + mu2 D2 is inner.
KernelProbe decompose_kernel(int degree_bound);

// Basis of {x in Uplus, deg <= bound : [x,E1] = [x,E2] = 0}. Only scalars
// are expected.
std::vector<Element> center_probe(int degree_bound);

// Monomials T^m, m in [-box,box]^3, commuting with all three torus
// generators. Only the unit is expected. The commutator conditions are
// diagonal across monomials, so the probe checks each monomial directly.
std::vector<Monomial> center_probe_torus(int box);

}  // namespace qrs
