#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pickpoly/cpoly.hpp"
#include "pickpoly/factorization.hpp"
#include "pickpoly/pick.hpp"
#include "pickpoly/zero_free.hpp"

namespace pickpoly::rif {

using mpoly::CPoly;
using mpoly::GaussRational;
using mpoly::MultiIndex;

// Point on the unit circle: an exact Gaussian rational when one exists, else an
// angle in turns.
class Unimodular {
 public:
  Unimodular() = default;
  static Unimodular exact(const GaussRational& v);  // throws unless |v|^2 == 1
  static Unimodular turns(double t);
  // Exact when z is a Gaussian rational of modulus one after small-denominator rounding.
  static Unimodular from_complex(Complex z);

  bool is_exact() const { return std::holds_alternative<GaussRational>(v_); }
  const GaussRational& exact_value() const { return std::get<GaussRational>(v_); }
  double angle_turns() const;
  Complex value() const;

  Unimodular conj() const;
  friend Unimodular operator*(const Unimodular& a, const Unimodular& b);
  bool approx_equal(const Unimodular& o, double tol = 1e-12) const;

 private:
  std::variant<GaussRational, double> v_{GaussRational(1)};
};

enum class Provenance { Verified, Asserted };

// The denominator could not be factored completely.
class CanonicalizationUnavailable : public Error {
 public:
  CanonicalizationUnavailable() : Error("canonicalization unavailable: factorization incomplete") {}
};

// f(z) = A z^beta conj(Q)(1/z) / Q(z) = A z^(beta - nu(Q)) reflect(Q)(z) / Q(z)
class RationalInner {
 public:
  RationalInner(Unimodular a, MultiIndex beta, CPoly q, Provenance provenance);

  static RationalInner coordinate(std::size_t n, std::size_t j);
  static RationalInner constant(std::size_t n, Unimodular a);
  // A = 1, beta = nu(Q)
  static RationalInner from_denominator(CPoly q, Provenance provenance);
  // Runs the zero-free search; throws unless it returns Verified.
  static RationalInner verified(Unimodular a, MultiIndex beta, CPoly q, const mpoly::ZeroFreeOptions& opt = {});

  std::size_t nvars() const { return q_.nvars(); }
  const Unimodular& A() const { return a_; }
  const MultiIndex& beta() const { return beta_; }
  const CPoly& Q() const { return q_; }
  Provenance provenance() const { return provenance_; }

  // z^(beta - nu(Q)) reflect(Q), without the constant A
  CPoly numerator() const;
  bool is_constant() const;

  Complex operator()(std::span<const Complex> z) const;

 private:
  Unimodular a_;
  MultiIndex beta_;
  CPoly q_;
  Provenance provenance_;
  std::shared_ptr<const mpoly::HornerPoly> num_, den_;
};

RationalInner multiply(const RationalInner& f, const RationalInner& g);

Complex eval_inner(const RationalInner& f, std::span<const Complex> z);

struct Canonical {
  Unimodular C;
  CPoly Qhat;                             // monic, coprime with its reflection
  MultiIndex monomial;                    // beta - nu(Q)
  std::vector<mpoly::FactorTerm> factors;  // factorization of Qhat
  mpoly::Confidence confidence = mpoly::Confidence::Exact;

  // C z^monomial reflect(Qhat) / Qhat with minimal beta
  RationalInner as_inner(Provenance p) const;
};

Canonical canonicalize(const RationalInner& f);

mpoly::Irreducibility is_irreducible_inner(const RationalInner& f);

struct InnerFactorization {
  Unimodular constant;
  std::vector<RationalInner> factors;
  double max_deviation = 0;  // sampled |product - f|
};

InnerFactorization factor_inner(const RationalInner& f);

// zeta -> f(zeta w) for w on the torus
pick::BlaschkeProduct slice(const RationalInner& f, std::span<const Complex> w);

std::vector<Complex> find_zero(const RationalInner& f, std::uint64_t seed = 0, int max_directions = 64);

struct InnerReport {
  std::vector<double> radii;
  std::vector<double> deviations;  // max | |f(r w)| - 1 | per radius
  int samples = 0;
  int skipped = 0;                 // samples where evaluation failed
  bool decreasing = false;
  bool pass = false;
};

using PolydiscMap = std::function<Complex(std::span<const Complex>)>;

InnerReport verify_inner_numeric(const PolydiscMap& f, std::size_t n, int samples = 1000,
                                 std::vector<double> radii = {0.9, 0.99, 0.999}, std::uint64_t seed = 0);
InnerReport verify_inner_numeric(const RationalInner& f, int samples = 1000,
                                 std::vector<double> radii = {0.9, 0.99, 0.999}, std::uint64_t seed = 0);

}  // namespace pickpoly::rif
