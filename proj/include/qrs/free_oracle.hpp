#pragma once

#include "qrs/scalar.hpp"

namespace qrs {

// Brute-force reference computation of the graded dimensions of the
// positive part, independent of the rewriting engine: words in the free
// algebra on E1, E2 of length d, modulo the span of x * (Serre relation) * y.
// The dimension of degree d is 2^d minus the rank of that span, computed by
// exact Gaussian elimination over the scalar field.
long free_algebra_graded_dimension(int degree);

}  // namespace qrs
