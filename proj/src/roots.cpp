#include "pickpoly/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace pickpoly::mpoly {

namespace {

Complex horner(std::span<const Complex> c, Complex x, Complex* derivative) {
  Complex p = 0, dp = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[k];
  }
  if (derivative) *derivative = dp;
  return p;
}

}  // namespace

std::vector<Complex> univariate_roots(std::span<const Complex> coeffs, double trim_tol) {
  double scale = 0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  std::size_t deg = coeffs.size();
  while (deg > 0 && std::abs(coeffs[deg - 1]) <= trim_tol * scale) --deg;
  if (deg <= 1) return {};
  --deg;  // degree of the trimmed polynomial
  const std::span<const Complex> c = coeffs.first(deg + 1);

  std::vector<Complex> roots;
  if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                                        static_cast<Eigen::Index>(deg));
    for (std::size_t r = 1; r < deg; ++r) companion(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r - 1)) = 1.0;
    for (std::size_t r = 0; r < deg; ++r)
      companion(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(deg - 1)) = -c[r] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw Error("companion eigenvalue solve failed");
    const auto& ev = solver.eigenvalues();
    for (Eigen::Index k = 0; k < ev.size(); ++k) roots.push_back(ev(k));
  }

  // A few Newton steps; keep a step only when it reduces the residual.
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      Complex dp;
      const Complex p = horner(c, r, &dp);
      if (std::abs(dp) == 0.0) break;
      const Complex next = r - p / dp;
      if (std::abs(horner(c, next, nullptr)) < std::abs(p)) {
        r = next;
      } else {
        break;
      }
    }
  }
  return roots;
}

}  // namespace pickpoly::mpoly
