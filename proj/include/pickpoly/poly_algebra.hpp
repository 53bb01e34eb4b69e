#pragma once

#include <optional>

#include "pickpoly/cpoly.hpp"

namespace pickpoly::mpoly {

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<CPoly> exact_divide(const CPoly& a, const CPoly& b);

// Scale so the GrLex-leading coefficient is 1. Returns the stripped constant.
GaussRational make_monic(CPoly& q);

// Pseudo-remainder of a by b with respect to variable k.
CPoly pseudo_remainder(const CPoly& a, const CPoly& b, std::size_t k);

// Gcd of the coefficients of q viewed as a polynomial in z_k.
CPoly content_in(const CPoly& q, std::size_t k);

// Monic greatest common divisor over Q(i) (recursive primitive PRS).
CPoly gcd(const CPoly& a, const CPoly& b);

}  // namespace pickpoly::mpoly
