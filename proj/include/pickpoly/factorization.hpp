#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pickpoly/cpoly.hpp"

namespace pickpoly::mpoly {

enum class Irreducibility { Irreducible, Reducible, Unknown };
enum class Confidence { Exact, Probabilistic };

struct IrreducibilityVerdict {
  Irreducibility status = Irreducibility::Unknown;
  // Two nonconstant factors whose product is the input up to a nonzero constant.
  std::optional<std::pair<CPoly, CPoly>> witness;
  Confidence confidence = Confidence::Exact;
  int trials = 0;  // bivariate slices examined (probabilistic verdicts only)
};

struct FactorTerm {
  CPoly poly;  // monic in GrLex order
  int multiplicity = 1;
  bool irreducible = true;  // false: piece could not be split or certified
};

enum class FactorStatus { Complete, Unknown };

struct Factorization {
  GaussRational constant{1};
  std::vector<FactorTerm> factors;
  FactorStatus status = FactorStatus::Complete;
  Confidence confidence = Confidence::Exact;

  // constant * prod poly^multiplicity
  CPoly expand(std::size_t n) const;
};

struct FactorOptions {
  int max_exact_degree = 12;  // bivariate Ruppert-Gao route above this degree is skipped
  std::vector<CPoly> hints;   // candidate factors tried by exact division first
  int slice_trials = 8;       // random bivariate slices for n > 2
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

// Absolute irreducibility over C. Exact for at most two effective variables;
// random bivariate slicing above that.
IrreducibilityVerdict is_irreducible(const CPoly& q, int trials = 8,
                                     std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

// Absolute factorization; every returned factor divides the input exactly.
Factorization factor(const CPoly& q, const FactorOptions& options = {});

// Ruppert-Gao system for f in the effective variables (x, y): a basis of the
// g-components of the solutions of f g_y - g f_y = f h_x - h f_x with
// deg g <= (m-1, n), deg h <= (m, n-1). Requires gcd(f, f_x) = 1; its dimension is
// then the number of absolutely irreducible factors.
std::vector<CPoly> ruppert_gao_basis(const CPoly& f, std::size_t x, std::size_t y);

}  // namespace pickpoly::mpoly
