#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pickpoly/gauss_rational.hpp"

namespace pickpoly::mpoly {

// Exponent vector alpha in N^n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<int> exps);
  explicit MultiIndex(std::vector<int> exps);

  static MultiIndex unit(std::size_t n, std::size_t k);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t k) const { return e_[k]; }
  int& operator[](std::size_t k) { return e_[k]; }
  const std::vector<int>& exponents() const { return e_; }

  int total() const;
  bool is_zero() const { return total() == 0; }

  // Componentwise partial order: this <= other.
  bool divides(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  // Componentwise difference; throws if a negative exponent would result.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;

 private:
  std::vector<int> e_;
};

// Graded lexicographic order with z1 < z2 < ... < zn.
struct GrLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Sparse polynomial in n variables over Q(i). No stored coefficient is zero.
class CPoly {
 public:
  using Terms = std::map<MultiIndex, GaussRational, GrLex>;

  CPoly() = default;
  explicit CPoly(std::size_t n) : n_(n) {}

  static CPoly constant(std::size_t n, const GaussRational& c);
  // z_{k+1}: variables are indexed from 0 internally.
  static CPoly variable(std::size_t n, std::size_t k);
  static CPoly monomial(const MultiIndex& alpha, const GaussRational& c = 1);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussRational coeff(const MultiIndex& alpha) const;
  GaussRational constant_term() const;

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t k) const;
  // Variables that occur with positive exponent.
  std::vector<std::size_t> variables() const;

  // Greatest term in GrLex order.
  const std::pair<const MultiIndex, GaussRational>& leading_term() const;

  void add_term(const MultiIndex& alpha, const GaussRational& c);

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const GaussRational& c);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(CPoly a, const GaussRational& c) { return a *= c; }
  friend CPoly operator*(const GaussRational& c, CPoly a) { return a *= c; }
  friend bool operator==(const CPoly& a, const CPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  CPoly pow(unsigned e) const;
  CPoly shift(const MultiIndex& alpha) const;  // multiply by z^alpha
  CPoly derivative(std::size_t k) const;
  // Coefficient of z_k^power, viewed as a polynomial in the remaining variables.
  CPoly coefficient_in(std::size_t k, int power) const;
  // Substitute polynomial images (all in a common ring) for every variable.
  CPoly compose(std::span<const CPoly> images) const;

  GaussRational evaluate(std::span<const GaussRational> z) const;
  // Horner per variable, outermost variable z1, then z2, ...
  Complex evaluate(std::span<const Complex> z) const;

 private:
  void check_same_ring(const CPoly& o) const;

  std::size_t n_ = 0;
  Terms terms_;
};

// Floating-point evaluator compiled from a CPoly: nested Horner scheme, outermost
// variable z1.
class HornerPoly {
 public:
  HornerPoly() = default;
  explicit HornerPoly(const CPoly& q);

  std::size_t nvars() const { return n_; }
  Complex operator()(std::span<const Complex> z) const;

 private:
  struct Node {
    Complex value{};            // leaf coefficient
    std::vector<Node> by_power;  // children indexed by exponent of this level's variable
  };
  static void insert(Node& node, const MultiIndex& alpha, std::size_t level, Complex c);
  static Complex eval(const Node& node, std::size_t level, std::span<const Complex> z);

  std::size_t n_ = 0;
  Node root_;
};

std::set<MultiIndex, GrLex> support(const CPoly& q);
MultiIndex nu(const CPoly& q);
bool is_deficient(const CPoly& q);
CPoly conj_coeffs(const CPoly& q);
// z^{nu(Q)} * conj(Q)(1/z): a_alpha z^alpha  ->  conj(a_alpha) z^{nu - alpha}.
CPoly reflect(const CPoly& q);

// Text grammar: "2 - z1 - z2", "(1/2+3/4i)*z1^2*z2". When n is 0 the variable count
// is the largest index that occurs (at least 1).
CPoly parse_poly(std::string_view text, std::size_t n = 0);
std::string format_poly(const CPoly& q);

}  // namespace pickpoly::mpoly
