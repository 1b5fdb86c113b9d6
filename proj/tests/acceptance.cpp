// Acceptance suite: every criterion is exact (identities over the symbolic
// field) with a pinned wall-clock budget. One line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <random>

#include "qrs/derivations.hpp"
#include "qrs/element.hpp"
#include "qrs/eval.hpp"
#include "qrs/free_oracle.hpp"
#include "qrs/hopf.hpp"
#include "qrs/morphisms.hpp"
#include "qrs/parser.hpp"
#include "qrs/random_gen.hpp"
#include "qrs/reproduce.hpp"

using namespace qrs;

namespace {

struct Criterion {
    int number;
    const char* label;
    double budget_ms;
    std::chrono::steady_clock::time_point start;

    Criterion(int n, const char* l, double budget)
        : number(n), label(l), budget_ms(budget),
          start(std::chrono::steady_clock::now()) {}

    void finish(bool pass) const {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::printf("[%s] criterion %2d: %-28s (%.0f ms, budget %.0f ms)\n",
                    pass ? "PASS" : "FAIL", number, label, ms, budget_ms);
        std::fflush(stdout);
        CHECK(pass);
        CHECK(ms < budget_ms);
    }
};

bool run_named(const std::string& id) {
    CheckResult r = run_reproduce(id);
    if (!r.pass)
        MESSAGE("reproduce ", id, " failed: ", r.detail);
    return r.pass;
}

}  // namespace

TEST_CASE("criterion 1: Serre-relation nullity") {
    Criterion c(1, "serre nullity", 1000);
    bool pass = true;
    for (const char* name : {"Uplus", "UcheckGE0", "UW"}) {
        SigPtr sig = AlgebraSignature::preset(name);
        pass = pass && parse("E1^2*E2 - (r+s)*E1*E2*E1 + r*s*E2*E1^2", sig).is_zero();
        pass = pass && parse("E1*E2^2 - (r+s)*E2*E1*E2 + r*s*E2^2*E1", sig).is_zero();
    }
    c.finish(pass);
}

TEST_CASE("criterion 2: PBW graded dimensions vs free-algebra oracle") {
    Criterion c(2, "pbw soundness", 30000);
    c.finish(run_named("cor1.5"));
}

TEST_CASE("criterion 3: skew-polynomial presentation") {
    Criterion c(3, "skew tower degree 4", 5000);
    c.finish(run_named("thm1.4"));
}

TEST_CASE("criterion 4: Hopf axioms with axiom-forced antipode") {
    Criterion c(4, "hopf axioms + regression", 30000);
    c.finish(run_named("prop1.6-hopf"));
}

TEST_CASE("criterion 5: algebra automorphism classification") {
    Criterion c(5, "classify box 3", 60000);
    c.finish(run_named("thm2.6"));
}

TEST_CASE("criterion 6: Hopf automorphism classification") {
    Criterion c(6, "hopf classification box 2", 60000);
    c.finish(run_named("thm2.7"));
}

TEST_CASE("criterion 7: torus relations and embedding") {
    Criterion c(7, "quantum-torus embedding", 5000);
    c.finish(run_named("prop3.1"));
}

TEST_CASE("criterion 8: central-action residue grid") {
    Criterion c(8, "residue iff spectrum law", 10000);
    c.finish(run_named("lem3.6"));
}

TEST_CASE("criterion 9: derivation decomposition and kernel") {
    Criterion c(9, "decompose + kernel dim 1", 120000);
    c.finish(run_named("thm3.7") && run_named("thm3.8"));
}

TEST_CASE("criterion 10: trivial center") {
    Criterion c(10, "center probes", 60000);
    c.finish(run_named("thm3.5-center"));
}

TEST_CASE("criterion 11: infrastructure properties") {
    Criterion c(11, "parser/assoc/scalar props", 60000);
    bool pass = true;

    // parser round-trip: 500 random elements spread over the presets
    std::mt19937_64 rng(20240801);
    for (const auto& name : AlgebraSignature::preset_names()) {
        SigPtr sig = AlgebraSignature::preset(name);
        for (int i = 0; i < 84 && pass; ++i) {
            Element x = random_element(rng, sig, 4, 4, 2);
            pass = parse(render(x), sig) == x;
        }
    }

    // associativity: 500 random triples over Uplus, UcheckGE0, Q3
    for (const auto& name : {"Uplus", "UcheckGE0", "Q3"}) {
        SigPtr sig = AlgebraSignature::preset(name);
        for (int i = 0; i < 167 && pass; ++i) {
            Element x = random_element(rng, sig, 4);
            Element y = random_element(rng, sig, 4);
            Element z = random_element(rng, sig, 4);
            pass = (x * y) * z == x * (y * z);
        }
    }

    // scalar field axioms: 1000 random samples
    EvalContext ctx(Rational(5, 7), Rational(3, 2));
    for (int i = 0; i < 1000 && pass; ++i) {
        Scalar x = random_scalar(rng), y = random_scalar(rng);
        Scalar z = random_scalar(rng, /*nonzero=*/true);
        pass = (x + y) + z == x + (y + z);
        pass = pass && x * (y + z) == x * y + x * z;
        pass = pass && (x * y) * z == x * (y * z);
        pass = pass && z * z.inv() == Scalar(1);
        pass = pass && z.inv().inv() == z;
        if (i % 5 == 0) {
            try {
                pass = pass && ctx.eval(x * y + z) ==
                                   ctx.add(ctx.mul(ctx.eval(x), ctx.eval(y)), ctx.eval(z));
            } catch (const MathError&) {
                // sample hit a non-invertible denominator; the identity is
                // exercised on the remaining samples
            }
        }
    }
    c.finish(pass);
}
