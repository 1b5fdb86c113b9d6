#pragma once

#include <vector>

#include "qrs/scalar.hpp"

namespace qrs {

// Dense exact linear algebra over the scalar field Q(u,v). Sizes here are
// desk scale (tens of unknowns), so plain Gaussian elimination with a
// cheapest-entry pivot is enough.
using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct LinearSolution {
    bool consistent = false;
    std::vector<Scalar> particular;            // one solution when consistent
    std::vector<std::vector<Scalar>> kernel;   // basis of the homogeneous space
    size_t rank = 0;
};

// Solves A x = b. A is row-major with rows of equal length; b matches the
// row count. Always computes the kernel of A.
LinearSolution solve_linear(ScalarMatrix a, std::vector<Scalar> b);

size_t matrix_rank(ScalarMatrix a);

}  // namespace qrs
