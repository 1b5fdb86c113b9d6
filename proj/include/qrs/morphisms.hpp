#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qrs/element.hpp"

namespace qrs {

// Candidate endomorphism of UcheckGE0 in the monomial form
//   K_l -> a_l K_{sigma(l)},
//   E1  -> b1 K1^a K2^b E_{sigma(1)},
//   E2  -> b2 K1^c K2^d E_{sigma(2)}.
struct AutParams {
    Scalar a1 = Scalar(1), a2 = Scalar(1);
    Scalar b1 = Scalar(1), b2 = Scalar(1);
    int a = 0, b = 0, c = 0, d = 0;
    bool swap = false;  // sigma = (1 2) when true

    static AutParams identity() { return AutParams{}; }

    // The closed-form classification predicate: sigma = id, b = c and
    // a + b + d = 0. respects_relations is the computational ground truth;
    // the two are checked to coincide box-wise.
    bool is_valid() const { return !swap && b == c && a + b + d == 0; }
};

struct RelationWitness {
    std::string relation;  // which defining relation broke
    std::string residue;   // rendered nonzero normal form
};

// Applies the candidate to an element of UcheckGE0 (multiplicative and
// linear extension; E3 image is derived from E3 = E1E2 - sE2E1).
Element apply(const AutParams& p, const Element& x);

// True iff the images of all eight defining relations normalize to zero.
std::optional<RelationWitness> respects_relations(const AutParams& p);

struct ClassifyResult {
    std::vector<std::array<int, 4>> tuples;  // valid (a,b,c,d), sigma = id
    bool swap_all_rejected = true;
    long candidates_checked = 0;
};

// Exhaustive scan of (a,b,c,d) in [-bound,bound]^4 and both permutations.
// Scalar parameters are fixed at 1: every defining relation is homogeneous
// in each generator image, so validity does not depend on them.
ClassifyResult classify_box(int bound);

// Group law on valid parameter records; checked against apply-composition.
AutParams compose(const AutParams& p, const AutParams& q);
AutParams inverse(const AutParams& p);

struct HopfWitness {
    std::string generator;
    std::string detail;
};

// True iff Delta(theta(g)) = (theta (x) theta)(Delta(g)) and
// eps(theta(g)) = eps(g) on all four generators. Requires that p already
// respects the relations.
std::optional<HopfWitness> is_hopf_automorphism(const AutParams& p);

struct ExponentMatrix {
    std::array<std::array<int, 2>, 2> m;
    int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    bool nonneg() const;
    // integer inverse for det = +-1
    ExponentMatrix inverse() const;
    bool is_permutation() const;
};

// K-exponent matrix of theta(K1), theta(K2).
ExponentMatrix exponent_matrix(const AutParams& p);

// All 2x2 matrices with entries in [0, max_entry] such that both M and
// M^-1 are nonnegative integer matrices. The permutation-matrix lemma says
// this list is exactly the two permutation matrices.
std::vector<ExponentMatrix> enumerate_gl2_nonneg(int max_entry);

}  // namespace qrs
