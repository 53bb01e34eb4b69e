#include "pickpoly/pick.hpp"

#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

#include "pickpoly/moebius.hpp"

namespace pickpoly::pick {

using moebius::psi;
using moebius::psi_inv;

namespace {

constexpr double kPointTol = 1e-12;

// -0.0 -> 0.0 so serialized output does not depend on the sign of zero
Complex tidy(Complex z) { return {z.real() + 0.0, z.imag() + 0.0}; }

void check_target(Complex b) {
  if (!(std::abs(b) <= 1.0 + kPointTol)) throw DomainError("target outside the closed disc");
}

}  // namespace

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex v = constant;
  for (Complex a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

HermitianMatrix pick_matrix(const DiscData& data) {
  const auto n = static_cast<Eigen::Index>(data.nodes.size());
  if (data.targets.size() != data.nodes.size()) throw DomainError("nodes and targets differ in length");
  for (Eigen::Index j = 0; j < n; ++j) {
    moebius::require_interior(data.nodes[j], "node");
    check_target(data.targets[j]);
    for (Eigen::Index k = 0; k < j; ++k)
      if (std::abs(data.nodes[j] - data.nodes[k]) < kPointTol) throw DomainError("coincident nodes");
  }
  const auto& a = data.nodes;
  const auto& b = data.targets;
  return HermitianMatrix::build(n, [&](Eigen::Index j, Eigen::Index k) {
    return (1.0 - b[j] * std::conj(b[k])) / (1.0 - a[j] * std::conj(a[k]));
  });
}

HermitianMatrix theorem_matrix(std::span<const Complex> xp1, std::span<const Complex> xp2, Complex c1,
                               Complex c2, std::size_t l) {
  if (xp1.size() != xp2.size() || l >= xp1.size()) throw DomainError("coordinate index out of range");
  if (std::abs(xp1[l] - xp2[l]) < kPointTol) throw DomainError("coordinate l degenerate");
  moebius::require_interior(xp1[l]);
  moebius::require_interior(xp2[l]);
  check_target(c1);
  check_target(c2);
  const Complex x[2] = {xp1[l], xp2[l]};
  const Complex c[2] = {c1, c2};
  return HermitianMatrix::build(2, [&](Eigen::Index j, Eigen::Index k) {
    return (1.0 - c[j] * std::conj(c[k])) / (1.0 - x[j] * std::conj(x[k]));
  });
}

PsdVerdict psd_check(const HermitianMatrix& m, double tol) {
  PsdVerdict v;
  const auto n = m.order();
  if (n == 0) {
    v.is_psd = true;
    return v;
  }
  std::vector<double> eig;
  if (n == 1) {
    eig = {m(0, 0).real()};
  } else if (n == 2) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double half_gap = std::hypot((a - d) / 2, std::abs(m(0, 1)));
    const double hi = (a + d) / 2 + half_gap;
    const double det = a * d - std::norm(m(0, 1));
    // det / hi avoids cancellation when one eigenvalue is tiny
    const double lo = hi > 0 ? det / hi : (a + d) / 2 - half_gap;
    eig = {lo, hi};
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.entries, Eigen::EigenvaluesOnly);
    for (Eigen::Index k = 0; k < n; ++k) eig.push_back(es.eigenvalues()[k]);
  }
  double hi = eig[0], lo = eig[0];
  for (double e : eig) {
    hi = std::max(hi, e);
    lo = std::min(lo, e);
  }
  v.tolerance = tol * std::max(1.0, hi);
  v.min_eigenvalue = lo;
  v.is_psd = lo >= -v.tolerance;
  for (double e : eig)
    if (e > v.tolerance) ++v.rank;
  return v;
}

DiscData moebius_normalize_data(const DiscData& data) {
  if (data.nodes.empty() || data.nodes.size() != data.targets.size()) throw DomainError("malformed disc data");
  const Complex an = data.nodes.back(), bn = data.targets.back();
  DiscData out;
  for (std::size_t j = 0; j < data.nodes.size(); ++j) {
    out.nodes.push_back(psi(an, data.nodes[j]));
    out.targets.push_back(psi(bn, data.targets[j]));
  }
  out.nodes.back() = 0.0;
  out.targets.back() = 0.0;
  return out;
}

Deflation deflate_data(const DiscData& data) {
  if (data.nodes.empty() || data.nodes.size() != data.targets.size()) throw DomainError("malformed disc data");
  if (std::abs(data.nodes.back()) > kPointTol || std::abs(data.targets.back()) > kPointTol)
    throw DomainError("deflation needs the last node and target at the origin");
  Deflation d;
  DiscData out;
  for (std::size_t j = 0; j + 1 < data.nodes.size(); ++j) {
    if (std::abs(data.nodes[j]) < kPointTol) throw DomainError("deflation undefined: node at the origin");
    const Complex t = data.targets[j] / data.nodes[j];
    if (std::abs(t) > 1.0 + kPointTol) {
      d.infeasible = true;
      d.index = j;
      return d;
    }
    out.nodes.push_back(data.nodes[j]);
    out.targets.push_back(t);
  }
  d.data = std::move(out);
  return d;
}

bool two_point_feasible(std::span<const Complex> x1, std::span<const Complex> x2, Complex w1, Complex w2,
                        double slack) {
  const double lhs = moebius::caratheodory_polydisc(x1, x2).rho;
  if (std::abs(w1 - w2) == 0.0) return true;
  return lhs >= moebius::rho(w1, w2) - slack;
}

BlaschkeProduct two_point_blaschke(Complex a1, Complex a2, Complex b1, Complex b2) {
  moebius::require_interior(a1, "node");
  moebius::require_interior(a2, "node");
  if (std::abs(a1 - a2) < kPointTol) throw DomainError("coincident nodes");
  check_target(b1);
  check_target(b2);

  BlaschkeProduct out;
  if (!moebius::in_disc(b1) || !moebius::in_disc(b2)) {
    if (std::abs(b1 - b2) > kPointTol || moebius::in_disc(b1) || moebius::in_disc(b2))
      throw DomainError("two-point Pick infeasible");
    out.constant = tidy(b1 / std::abs(b1));
    return out;
  }

  const PsdVerdict v = psd_check(pick_matrix({{a1, a2}, {b1, b2}}));
  if (!v.is_psd) throw DomainError("two-point Pick infeasible");
  const Complex zeta0 = psi(a1, a2);
  Complex omega = psi(b1, b2) / zeta0;
  if (std::abs(omega) > 1.0 + 1e-10) throw DomainError("two-point Pick infeasible");

  // inner map u = g(zeta), zeta = psi(a1, z), B = psi_inv(b1, u)
  std::vector<Complex> zeta_zeros;
  std::function<Complex(Complex)> g;
  if (v.rank <= 1) {
    omega /= std::abs(omega);
    g = [omega](Complex zeta) { return omega * zeta; };
    zeta_zeros.push_back(-b1 * std::conj(omega));
  } else {
    if (std::abs(omega) >= 1.0) throw DomainError("two-point Pick infeasible");
    g = [omega, zeta0](Complex zeta) { return zeta * psi_inv(omega, psi(zeta0, zeta)); };
    // zeta * h(zeta) = -b1 as a quadratic
    const Complex qa = 1.0 - omega * std::conj(zeta0);
    const Complex qb = omega - zeta0 + b1 * (std::conj(omega) - std::conj(zeta0));
    const Complex qc = b1 * (1.0 - std::conj(omega) * zeta0);
    const Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    const Complex q = -0.5 * (qb + (std::real(std::conj(qb) * disc) >= 0 ? disc : -disc));
    if (std::abs(q) == 0.0) {
      zeta_zeros = {0.0, 0.0};
    } else {
      zeta_zeros = {q / qa, qc / q};
    }
  }
  for (Complex zz : zeta_zeros) out.zeros.push_back(tidy(psi_inv(a1, zz)));

  auto exact = [&](Complex z) { return psi_inv(b1, g(psi(a1, z))); };
  BlaschkeProduct bare{1.0, out.zeros};
  const Complex probe = 1.0;
  const Complex k = exact(probe) / bare(probe);
  out.constant = tidy(k / std::abs(k));
  return out;
}

}  // namespace pickpoly::pick
