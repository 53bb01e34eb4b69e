#pragma once

#include <span>
#include <vector>

#include "pickpoly/common.hpp"

namespace pickpoly::mpoly {

// Roots of sum_k coeffs[k] * x^k via eigenvalues of the companion matrix, followed
// by Newton polishing. Leading coefficients with modulus <= trim_tol * max|coeff|
// are dropped first.
std::vector<Complex> univariate_roots(std::span<const Complex> coeffs, double trim_tol = 0.0);

}  // namespace pickpoly::mpoly
