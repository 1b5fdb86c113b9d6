#include "doctest.h"

#include <random>
#include <set>

#include "qrs/morphisms.hpp"
#include "qrs/parser.hpp"
#include "qrs/random_gen.hpp"

using namespace qrs;

namespace {

SigPtr UCHECK = AlgebraSignature::preset(Preset::UcheckGE0);

Element el(const std::string& text) {
    return parse(text, UCHECK);
}

AutParams tuple_params(int a, int b, int c, int d, bool swap = false) {
    AutParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    p.swap = swap;
    return p;
}

}  // namespace

TEST_CASE("apply on the generator images") {
    CHECK(apply(AutParams::identity(), el("E1*E3")) == el("E1*E3"));
    CHECK(apply(tuple_params(1, 0, 0, -1), el("E1")) == el("K1*E1"));
    AutParams swapped = tuple_params(0, 0, 0, 0, true);
    swapped.a1 = Scalar(2);
    CHECK(apply(swapped, el("K1")) == el("2*K2"));
    CHECK(apply(swapped, el("E1")) == el("E2"));
}

TEST_CASE("respects_relations distinguishes the classified family") {
    AutParams good = tuple_params(1, 0, 0, -1);
    good.a1 = Scalar::r();
    good.b2 = Scalar(3);
    CHECK_FALSE(respects_relations(good).has_value());

    auto bad = respects_relations(tuple_params(1, 0, 0, 0));
    REQUIRE(bad.has_value());
    CHECK(bad->relation == "serre1");

    auto swapped = respects_relations(tuple_params(0, 0, 0, 0, true));
    REQUIRE(swapped.has_value());
}

TEST_CASE("classify_box returns exactly the constraint set") {
    // box 1 recomputed with the relation-checking oracle: the 7 tuples with
    // b = c and a+b+d = 0
    ClassifyResult r1 = classify_box(1);
    std::set<std::array<int, 4>> got(r1.tuples.begin(), r1.tuples.end());
    std::set<std::array<int, 4>> want = {{0, 0, 0, 0},  {1, 0, 0, -1}, {-1, 0, 0, 1},
                                         {0, 1, 1, -1}, {-1, 1, 1, 0}, {0, -1, -1, 1},
                                         {1, -1, -1, 0}};
    CHECK(got == want);
    CHECK(r1.swap_all_rejected);
    CHECK(r1.candidates_checked == 81 * 2);

    ClassifyResult r0 = classify_box(0);
    CHECK(r0.tuples == std::vector<std::array<int, 4>>{{0, 0, 0, 0}});

    // soundness & completeness at radius 2
    ClassifyResult r2 = classify_box(2);
    for (const auto& t : r2.tuples) {
        CHECK(t[1] == t[2]);
        CHECK(t[0] + t[1] + t[3] == 0);
    }
    int expected = 0;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int d = -2; d <= 2; ++d)
                if (a + b + d == 0)
                    ++expected;
    CHECK(int(r2.tuples.size()) == expected);
}

TEST_CASE("homomorphism property of apply for valid parameters") {
    std::mt19937_64 rng(64);
    AutParams p = tuple_params(-1, 1, 1, 0);
    p.a1 = Scalar(2);
    p.a2 = Scalar::s();
    p.b1 = Scalar::r();
    for (int i = 0; i < 40; ++i) {
        Element x = random_element(rng, UCHECK, 3);
        Element y = random_element(rng, UCHECK, 3);
        CHECK(apply(p, x * y) == apply(p, x) * apply(p, y));
    }
}

TEST_CASE("compose matches functional composition") {
    AutParams q = tuple_params(1, 0, 0, -1);
    q.a1 = Scalar(2);
    q.b1 = Scalar::s();
    CHECK(compose(AutParams::identity(), q).a == q.a);
    CHECK(compose(AutParams::identity(), q).b1 == q.b1);

    AutParams sq = compose(q, q);
    CHECK(sq.a == 2);
    CHECK(sq.d == -2);

    std::mt19937_64 rng(128);
    std::vector<Scalar> pool = {Scalar(1), Scalar(2), Scalar::r(), Scalar::s(),
                                Scalar::r() * Scalar::s()};
    auto random_valid = [&]() {
        std::uniform_int_distribution<int> e(-2, 2);
        std::uniform_int_distribution<size_t> pi(0, pool.size() - 1);
        int a = e(rng), b = e(rng);
        AutParams p = tuple_params(a, b, b, -a - b);
        p.a1 = pool[pi(rng)];
        p.a2 = pool[pi(rng)];
        p.b1 = pool[pi(rng)];
        p.b2 = pool[pi(rng)];
        return p;
    };
    const char* gens[4] = {"K1", "K2", "E1", "E2"};
    for (int i = 0; i < 25; ++i) {
        AutParams p = random_valid(), q2 = random_valid();
        AutParams pq = compose(p, q2);
        for (const char* g : gens)
            CHECK(apply(pq, el(g)) == apply(p, apply(q2, el(g))));
        // inverse really inverts
        AutParams pinv = inverse(p);
        for (const char* g : gens)
            CHECK(apply(pinv, apply(p, el(g))) == el(g));
    }
    CHECK_THROWS_AS(compose(tuple_params(1, 0, 0, 0), q), AlgebraError);
}

TEST_CASE("hopf-automorphism predicate") {
    AutParams free_b = tuple_params(0, 0, 0, 0);
    free_b.b1 = Scalar::r();
    free_b.b2 = Scalar(7);
    CHECK_FALSE(is_hopf_automorphism(free_b).has_value());

    AutParams bad_a = tuple_params(0, 0, 0, 0);
    bad_a.a1 = Scalar(2);
    auto w = is_hopf_automorphism(bad_a);
    REQUIRE(w.has_value());
    CHECK(w->generator == "K1");

    AutParams twisted = tuple_params(1, 0, 0, -1);
    auto w2 = is_hopf_automorphism(twisted);
    REQUIRE(w2.has_value());
    CHECK(w2->generator == "E1");

    CHECK_THROWS_AS(is_hopf_automorphism(tuple_params(1, 1, 1, 1)), AlgebraError);
}

TEST_CASE("exponent matrices and the permutation lemma at n = 2") {
    CHECK(exponent_matrix(AutParams::identity()).is_permutation());
    CHECK(exponent_matrix(tuple_params(0, 0, 0, 0, true)).m ==
          std::array<std::array<int, 2>, 2>{{{0, 1}, {1, 0}}});

    // matrices with entries in 0..3 whose inverse is also nonnegative:
    // exactly the two permutation matrices
    auto found = enumerate_gl2_nonneg(3);
    REQUIRE(found.size() == 2);
    for (const auto& m : found) {
        CHECK(m.is_permutation());
        CHECK(m.nonneg());
        CHECK(m.inverse().nonneg());
    }

    // every valid parameter record sits over the identity matrix
    for (const auto& t : classify_box(1).tuples) {
        ExponentMatrix m = exponent_matrix(tuple_params(t[0], t[1], t[2], t[3]));
        CHECK(m.m == std::array<std::array<int, 2>, 2>{{{1, 0}, {0, 1}}});
        CHECK(m.inverse().nonneg());
    }
}
