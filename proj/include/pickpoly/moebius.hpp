#pragma once

#include <span>
#include <vector>

#include "pickpoly/common.hpp"

namespace pickpoly::moebius {

// Points with 1 - |z| below this are treated as boundary points.
inline constexpr double kBoundaryTol = 1e-12;

bool in_disc(Complex z);
void require_interior(Complex a, const char* what = "point");

// psi_a(z) = (z - a) / (1 - conj(a) z)
Complex psi(Complex a, Complex z);
// (w + a) / (1 + conj(a) w)
Complex psi_inv(Complex a, Complex w);

std::vector<Complex> Psi(std::span<const Complex> x, std::span<const Complex> z);
std::vector<Complex> Psi_inv(std::span<const Complex> x, std::span<const Complex> w);

// Pseudohyperbolic distance |a - b| / |1 - conj(a) b|.
double rho(Complex a, Complex b);

struct PolydiscDistance {
  double rho = 0;       // max over coordinates; compare on this
  double distance = 0;  // atanh(rho), display only
  std::vector<std::size_t> argmax;  // 0-based coordinates attaining the max
};
PolydiscDistance caratheodory_polydisc(std::span<const Complex> x1, std::span<const Complex> x2);

// z -> rotation * psi_center(z)
struct DiscAutomorphism {
  Complex center{0.0};
  Complex rotation{1.0};

  DiscAutomorphism() = default;
  DiscAutomorphism(Complex a, Complex rot = 1.0);

  Complex operator()(Complex z) const { return rotation * psi(center, z); }
  DiscAutomorphism inverse() const;
  // (*this) o g
  DiscAutomorphism after(const DiscAutomorphism& g) const;
};

struct PolydiscAutomorphism {
  std::vector<DiscAutomorphism> components;

  static PolydiscAutomorphism moving_to_origin(std::span<const Complex> x);
  std::vector<Complex> operator()(std::span<const Complex> z) const;
  PolydiscAutomorphism inverse() const;
};

}  // namespace pickpoly::moebius
