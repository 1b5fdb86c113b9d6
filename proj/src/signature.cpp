#include "qrs/signature.hpp"

#include <map>
#include <mutex>

#include "qrs/errors.hpp"

namespace qrs {

namespace {

// shorthand for the commutation scalars u^a v^b (u = r^(1/3), v = s^(1/3))
Scalar uv(int a, int b) {
    return Scalar::uv_monomial(a, b);
}

}  // namespace

struct SignatureBuilder {
    AlgebraSignature sig;

    SignatureBuilder(std::string name, std::vector<Generator> gens, int chain_rank = -1) {
        sig.name_ = std::move(name);
        sig.gens_ = std::move(gens);
        sig.chain_rank_ = chain_rank;
        sig.rules_.resize(sig.gens_.size() * sig.gens_.size());
    }

    void rule(std::string_view hi, std::string_view lo, Scalar q,
              std::vector<std::pair<Scalar, std::vector<int32_t>>> tail = {}) {
        int h = sig.index_of(hi), l = sig.index_of(lo);
        if (h < 0 || l < 0 || h <= l)
            throw AlgebraError("SignatureBuilder: bad rule pair");
        sig.rules_[h * sig.gens_.size() + l] = RewriteRule{std::move(q), std::move(tail)};
    }

    SigPtr finish() { return std::make_shared<AlgebraSignature>(std::move(sig)); }
};

int AlgebraSignature::index_of(std::string_view gen_name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == gen_name)
            return static_cast<int>(i);
    return -1;
}

const RewriteRule& AlgebraSignature::rule(int hi, int lo) const {
    return rules_[hi * gens_.size() + lo];
}

int AlgebraSignature::weighted_degree(std::span<const int32_t> exps) const {
    int d = 0;
    for (size_t i = 0; i < exps.size(); ++i)
        d += gens_[i].weight * exps[i];
    return d;
}

bool AlgebraSignature::same_generators(const AlgebraSignature& o) const {
    if (gens_.size() != o.gens_.size())
        return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name)
            return false;
    return true;
}

namespace {

// E-sector rules shared by Uplus, UcheckGE0, UW, A3, A2. Normal order is
// E1, E3, E2 at the given positions; E3 = E1E2 - sE2E1 is a generator with
//   E3*E1 -> r^-1 E1*E3
//   E2*E3 -> r^-1 E3*E2
//   E2*E1 -> s^-1 E1*E2 - s^-1 E3
void add_e_rules(SignatureBuilder& b, int e3_pos, size_t ngens) {
    std::vector<int32_t> e3exps(ngens, 0);
    e3exps[e3_pos] = 1;
    b.rule("E3", "E1", uv(-3, 0));
    b.rule("E2", "E3", uv(-3, 0));
    b.rule("E2", "E1", uv(0, -3), {{-uv(0, -3), e3exps}});
}

SigPtr make_uplus() {
    SignatureBuilder b("Uplus",
                       {{"E1", false, 1}, {"E3", false, 2}, {"E2", false, 1}},
                       /*chain_rank=*/0);
    add_e_rules(b, 1, 3);
    return b.finish();
}

SigPtr make_a3() {
    SignatureBuilder b("A3",
                       {{"E1", true, 1}, {"E3", false, 2}, {"E2", false, 1}},
                       /*chain_rank=*/1);
    add_e_rules(b, 1, 3);
    return b.finish();
}

SigPtr make_a2() {
    SignatureBuilder b("A2",
                       {{"E1", true, 1}, {"E3", true, 2}, {"E2", false, 1}},
                       /*chain_rank=*/2);
    add_e_rules(b, 1, 3);
    return b.finish();
}

SigPtr make_ucheck() {
    SignatureBuilder b("UcheckGE0", {{"K1", true, 0},
                                     {"K2", true, 0},
                                     {"E1", false, 1},
                                     {"E3", false, 2},
                                     {"E2", false, 1}});
    b.rule("K2", "K1", Scalar(1));
    // K1 E1 = r^(1/3) s^(-2/3) E1 K1 and the other three defining K-E
    // relations, inverted to normal-order form, plus the two derived E3 rows.
    b.rule("E1", "K1", uv(-1, 2));
    b.rule("E1", "K2", uv(1, 1));
    b.rule("E2", "K1", uv(-1, -1));
    b.rule("E2", "K2", uv(-2, 1));
    b.rule("E3", "K1", uv(-2, 1));
    b.rule("E3", "K2", uv(-1, 2));
    add_e_rules(b, 3, 5);
    return b.finish();
}

SigPtr make_uw() {
    SignatureBuilder b("UW", {{"W1", true, 0},
                              {"W2", true, 0},
                              {"E1", false, 1},
                              {"E3", false, 2},
                              {"E2", false, 1}});
    b.rule("W2", "W1", Scalar(1));
    // W1 E1 = r s^-1 E1 W1, W1 E2 = s E2 W1, W2 E1 = r^-1 E1 W2,
    // W2 E2 = r s^-1 E2 W2; E3 rows derived.
    b.rule("E1", "W1", uv(-3, 3));
    b.rule("E1", "W2", uv(3, 0));
    b.rule("E2", "W1", uv(0, -3));
    b.rule("E2", "W2", uv(-3, 3));
    b.rule("E3", "W1", uv(-3, 0));
    b.rule("E3", "W2", uv(0, 3));
    add_e_rules(b, 3, 5);
    return b.finish();
}

SigPtr make_q3() {
    SignatureBuilder b("Q3", {{"T1", true, 1}, {"T2", true, 1}, {"T3", true, 1}});
    // T1T2 = s T2T1, T1T3 = r T3T1, T2T3 = r^-1 T3T2
    b.rule("T2", "T1", uv(0, -3));
    b.rule("T3", "T1", uv(-3, 0));
    b.rule("T3", "T2", uv(3, 0));
    return b.finish();
}

}  // namespace

SigPtr AlgebraSignature::preset(Preset p) {
    static std::mutex mu;
    static std::map<Preset, SigPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end())
        return it->second;
    SigPtr sig;
    switch (p) {
        case Preset::Uplus: sig = make_uplus(); break;
        case Preset::UcheckGE0: sig = make_ucheck(); break;
        case Preset::UW: sig = make_uw(); break;
        case Preset::A3: sig = make_a3(); break;
        case Preset::A2: sig = make_a2(); break;
        case Preset::Q3: sig = make_q3(); break;
    }
    cache[p] = sig;
    return sig;
}

SigPtr AlgebraSignature::preset(std::string_view name) {
    if (name == "Uplus")
        return preset(Preset::Uplus);
    if (name == "UcheckGE0")
        return preset(Preset::UcheckGE0);
    if (name == "UW")
        return preset(Preset::UW);
    if (name == "A3")
        return preset(Preset::A3);
    if (name == "A2")
        return preset(Preset::A2);
    if (name == "Q3")
        return preset(Preset::Q3);
    throw AlgebraError("unknown algebra preset: " + std::string(name));
}

const std::vector<std::string>& AlgebraSignature::preset_names() {
    static const std::vector<std::string> names = {"Uplus", "UcheckGE0", "UW",
                                                   "A3",    "A2",        "Q3"};
    return names;
}

}  // namespace qrs
