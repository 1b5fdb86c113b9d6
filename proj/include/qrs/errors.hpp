#pragma once

#include <stdexcept>
#include <string>

namespace qrs {

// Lexical or syntactic failure in the expression language.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural misuse: signature mismatch, illegal exponent, bad promotion.
struct AlgebraError : std::runtime_error {
    explicit AlgebraError(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic outside the domain: inverse of zero, sample at a pole,
// derivation images that break the defining relations.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qrs
