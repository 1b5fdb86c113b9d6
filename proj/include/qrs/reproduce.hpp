#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qrs {

// Scripted end-to-end checks, one per classification/identity the engine
// reproduces. Shared by the `reproduce` CLI subcommand and the acceptance
// suite so both run exactly the same code.
struct CheckResult {
    std::string id;
    bool pass = false;
    double millis = 0.0;
    std::string detail;
};

const std::vector<std::string>& reproduce_ids();

// Throws AlgebraError for an unknown identifier.
CheckResult run_reproduce(const std::string& id, uint64_t seed = 20240801);

}  // namespace qrs
