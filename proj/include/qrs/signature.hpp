#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrs/scalar.hpp"

namespace qrs {

class AlgebraSignature;
using SigPtr = std::shared_ptr<const AlgebraSignature>;

struct Generator {
    std::string name;
    bool invertible = false;
    int weight = 1;
};

// Rewrite rule for an out-of-order adjacent pair: with hi after lo in the
// normal order, g_hi * g_lo -> q * g_lo * g_hi + tail. Tail monomials are
// stored as exponent vectors already in normal order and strictly smaller
// than g_lo*g_hi in the monomial order, which makes rewriting terminate.
struct RewriteRule {
    Scalar q;
    std::vector<std::pair<Scalar, std::vector<int32_t>>> tail;
};

enum class Preset { Uplus, UcheckGE0, UW, A3, A2, Q3 };

// A presentation with a fixed PBW normal order. Immutable once built;
// presets are cached singletons, so elements of the same preset share one
// signature object.
class AlgebraSignature {
public:
    static SigPtr preset(Preset p);
    static SigPtr preset(std::string_view name);  // throws AlgebraError on unknown name
    static const std::vector<std::string>& preset_names();

    const std::string& name() const { return name_; }
    std::span<const Generator> generators() const { return gens_; }
    size_t size() const { return gens_.size(); }
    int index_of(std::string_view gen_name) const;  // -1 when absent

    // hi, lo are generator positions with hi > lo
    const RewriteRule& rule(int hi, int lo) const;

    int weighted_degree(std::span<const int32_t> exps) const;

    bool same_generators(const AlgebraSignature& o) const;

    // chain position for localization promotion: Uplus(0) -> A3(1) -> A2(2);
    // -1 for signatures outside the chain
    int chain_rank() const { return chain_rank_; }

private:
    friend struct SignatureBuilder;
    std::string name_;
    std::vector<Generator> gens_;
    std::vector<RewriteRule> rules_;  // indexed by hi*size+lo
    int chain_rank_ = -1;
};

}  // namespace qrs
