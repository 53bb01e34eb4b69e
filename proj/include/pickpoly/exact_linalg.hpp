#pragma once

#include <vector>

#include "pickpoly/gauss_rational.hpp"

namespace pickpoly::mpoly {

using ExactMatrix = std::vector<std::vector<GaussRational>>;  // row-major
using ExactVector = std::vector<GaussRational>;

// Basis of {x : A x = 0} over Q(i), one vector per free column of the reduced
// row echelon form (free entry 1, other free entries 0).
std::vector<ExactVector> nullspace(ExactMatrix a, std::size_t cols);

}  // namespace pickpoly::mpoly
