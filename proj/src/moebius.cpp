#include "pickpoly/moebius.hpp"

#include <cmath>
#include <string>

namespace pickpoly::moebius {

bool in_disc(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()) && 1.0 - std::abs(z) >= kBoundaryTol; }

void require_interior(Complex a, const char* what) {
  if (!in_disc(a)) throw DomainError(std::string(what) + " not in the open disc");
}

Complex psi(Complex a, Complex z) {
  require_interior(a, "automorphism center");
  return (z - a) / (1.0 - std::conj(a) * z);
}

Complex psi_inv(Complex a, Complex w) {
  require_interior(a, "automorphism center");
  return (w + a) / (1.0 + std::conj(a) * w);
}

namespace {
void same_size(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("dimension mismatch");
}
}  // namespace

std::vector<Complex> Psi(std::span<const Complex> x, std::span<const Complex> z) {
  same_size(x.size(), z.size());
  std::vector<Complex> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = psi(x[k], z[k]);
  return out;
}

std::vector<Complex> Psi_inv(std::span<const Complex> x, std::span<const Complex> w) {
  same_size(x.size(), w.size());
  std::vector<Complex> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = psi_inv(x[k], w[k]);
  return out;
}

double rho(Complex a, Complex b) {
  require_interior(a);
  require_interior(b);
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

PolydiscDistance caratheodory_polydisc(std::span<const Complex> x1, std::span<const Complex> x2) {
  same_size(x1.size(), x2.size());
  PolydiscDistance d;
  std::vector<double> r(x1.size());
  for (std::size_t k = 0; k < x1.size(); ++k) {
    r[k] = rho(x1[k], x2[k]);
    d.rho = std::max(d.rho, r[k]);
  }
  for (std::size_t k = 0; k < r.size(); ++k)
    if (r[k] == d.rho) d.argmax.push_back(k);
  d.distance = std::atanh(d.rho);
  return d;
}

DiscAutomorphism::DiscAutomorphism(Complex a, Complex rot) : center(a), rotation(rot) {
  require_interior(a, "automorphism center");
  if (std::abs(std::abs(rot) - 1.0) > 1e-12) throw DomainError("rotation must be unimodular");
}

DiscAutomorphism DiscAutomorphism::inverse() const {
  // w = r psi_a(z)  <=>  z = psi_{-a}(conj(r) w) = conj(r) psi_{-a r}(w)
  return {-center * rotation, std::conj(rotation)};
}

DiscAutomorphism DiscAutomorphism::after(const DiscAutomorphism& g) const {
  const Complex c = g.inverse()(center);
  const DiscAutomorphism base(c, 1.0);
  // rotation read off from one point
  const Complex z = 0.0;
  const Complex target = (*this)(g(z));
  const Complex unrotated = base(z);
  if (std::abs(unrotated) < 1e-300) {
    const Complex one = 0.5;
    return {c, (*this)(g(one)) / base(one)};
  }
  Complex rot = target / unrotated;
  return {c, rot / std::abs(rot)};
}

PolydiscAutomorphism PolydiscAutomorphism::moving_to_origin(std::span<const Complex> x) {
  PolydiscAutomorphism p;
  for (Complex a : x) p.components.emplace_back(a, 1.0);
  return p;
}

std::vector<Complex> PolydiscAutomorphism::operator()(std::span<const Complex> z) const {
  same_size(components.size(), z.size());
  std::vector<Complex> out(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) out[k] = components[k](z[k]);
  return out;
}

PolydiscAutomorphism PolydiscAutomorphism::inverse() const {
  PolydiscAutomorphism p;
  for (const auto& c : components) p.components.push_back(c.inverse());
  return p;
}

}  // namespace pickpoly::moebius
