#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pickpoly/common.hpp"

namespace pickpoly::pick {

inline constexpr double kRankTol = 1e-10;

struct HermitianMatrix {
  Eigen::MatrixXcd entries;

  // Fills the upper triangle from f(j, k) and mirrors it.
  template <class F>
  static HermitianMatrix build(Eigen::Index order, F&& f) {
    HermitianMatrix h{Eigen::MatrixXcd(order, order)};
    for (Eigen::Index j = 0; j < order; ++j) {
      h.entries(j, j) = Complex(f(j, j).real(), 0.0);
      for (Eigen::Index k = j + 1; k < order; ++k) {
        h.entries(j, k) = f(j, k);
        h.entries(k, j) = std::conj(h.entries(j, k));
      }
    }
    return h;
  }

  Eigen::Index order() const { return entries.rows(); }
  Complex operator()(Eigen::Index j, Eigen::Index k) const { return entries(j, k); }
};

struct PsdVerdict {
  bool is_psd = false;
  int rank = 0;
  double min_eigenvalue = 0;
  double tolerance = 0;  // absolute threshold actually applied
};

struct BlaschkeProduct {
  Complex constant{1.0};
  std::vector<Complex> zeros;

  int degree() const { return static_cast<int>(zeros.size()); }
  Complex operator()(Complex z) const;
};

struct DiscData {
  std::vector<Complex> nodes;
  std::vector<Complex> targets;
};

HermitianMatrix pick_matrix(const DiscData& data);

// 2x2 matrix (1 - c_j conj(c_k)) / (1 - X'_{j,l} conj(X'_{k,l})); l is 0-based.
HermitianMatrix theorem_matrix(std::span<const Complex> xp1, std::span<const Complex> xp2, Complex c1,
                               Complex c2, std::size_t l);

PsdVerdict psd_check(const HermitianMatrix& m, double tol = kRankTol);

// Moves the last node and target to the origin.
DiscData moebius_normalize_data(const DiscData& data);

struct Deflation {
  std::optional<DiscData> data;  // absent when infeasible
  bool infeasible = false;
  std::size_t index = 0;  // offending pair when infeasible
};
// Requires a_n = b_n = 0. Drops the last pair and replaces b_j by b_j / a_j.
Deflation deflate_data(const DiscData& data);

// max_j rho(X1_j, X2_j) >= rho(w1, w2), compared on pseudohyperbolic values.
bool two_point_feasible(std::span<const Complex> x1, std::span<const Complex> x2, Complex w1, Complex w2,
                        double slack = 1e-12);

// Minimal-degree Blaschke product with B(a1) = b1, B(a2) = b2; degree equals the
// rank of the 2x2 Pick matrix.
BlaschkeProduct two_point_blaschke(Complex a1, Complex a2, Complex b1, Complex b2);

}  // namespace pickpoly::pick
