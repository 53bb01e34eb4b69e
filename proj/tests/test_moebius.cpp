#include <cmath>
#include <random>

#include "doctest.h"
#include "pickpoly/moebius.hpp"

using namespace pickpoly;
using namespace pickpoly::moebius;

namespace {
Complex random_disc(std::mt19937_64& rng, double rmax = 0.95) {
  std::uniform_real_distribution<double> u(0, 1);
  return std::polar(rmax * std::sqrt(u(rng)), 2 * M_PI * u(rng));
}
}  // namespace

TEST_CASE("psi and psi_inv examples") {
  Complex z(0.3, -0.2);
  CHECK(std::abs(psi(0.0, z) - z) < 1e-16);
  CHECK(std::abs(psi(z, z)) < 1e-16);
  CHECK(std::abs(psi(0.5, 0.0) - (-0.5)) < 1e-16);
  CHECK(std::abs(psi_inv(0.0, z) - z) < 1e-16);
  CHECK(std::abs(psi_inv(z, 0.0) - z) < 1e-16);
  CHECK(std::abs(psi_inv(0.5, -0.5)) < 1e-16);
  CHECK_THROWS_AS(psi(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(psi(Complex(0.6, 0.8), 0.0), DomainError);
}

TEST_CASE("Psi componentwise") {
  std::vector<Complex> zero{0.0, 0.0}, z{0.2, Complex(0, 0.4)};
  CHECK(Psi(zero, z) == z);
  auto o = Psi(z, z);
  CHECK(std::abs(o[0]) + std::abs(o[1]) < 1e-16);
  std::vector<Complex> x{0.5, 0.0}, p{0.0, 1.0 / 3};
  auto r = Psi(x, p);
  CHECK(std::abs(r[0] + 0.5) < 1e-16);
  CHECK(std::abs(r[1] - 1.0 / 3) < 1e-16);
  auto back = Psi_inv(x, r);
  CHECK(std::abs(back[0] - p[0]) + std::abs(back[1] - p[1]) < 1e-15);
  std::vector<Complex> one{0.1};
  CHECK_THROWS(Psi(one, z));
}

TEST_CASE("rho and caratheodory") {
  CHECK(rho(0.0, 0.5) == doctest::Approx(0.5));
  CHECK(rho(Complex(0.2, 0.1), Complex(0.2, 0.1)) == 0.0);
  CHECK(rho(0.5, -0.5) == doctest::Approx(0.8));
  CHECK_THROWS(rho(1.0, 0.0));

  std::vector<Complex> a{0.5, 0.0}, zero{0.0, 0.0}, b{0.5, 1.0 / 3};
  auto d = caratheodory_polydisc(a, zero);
  CHECK(d.distance == doctest::Approx(std::atanh(0.5)));
  CHECK(d.argmax == std::vector<std::size_t>{0});
  CHECK(caratheodory_polydisc(a, a).distance == 0.0);
  auto e = caratheodory_polydisc(b, zero);
  CHECK(e.distance == doctest::Approx(std::atanh(0.5)));
  CHECK(e.argmax == std::vector<std::size_t>{0});
}

TEST_CASE("random isometry, involution, boundary") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> th(0, 2 * M_PI);
  for (int i = 0; i < 1000; ++i) {
    Complex a = random_disc(rng), x = random_disc(rng, 0.9), y = random_disc(rng, 0.9);
    CHECK(std::abs(rho(psi(a, x), psi(a, y)) - rho(x, y)) < 1e-12);
    CHECK(std::abs(psi(a, psi_inv(a, x)) - x) < 1e-14);
    CHECK(std::abs(psi_inv(a, psi(a, x)) - x) < 1e-14);
    CHECK(std::abs(std::abs(psi(a, std::polar(1.0, th(rng)))) - 1.0) < 1e-12);
    // comparisons on rho agree with comparisons on atanh(rho)
    double r1 = rho(a, x), r2 = rho(a, y);
    CHECK((r1 >= r2) == (std::atanh(r1) >= std::atanh(r2)));
  }
}

TEST_CASE("automorphism group operations") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    DiscAutomorphism f(random_disc(rng), std::polar(1.0, 0.7 * i));
    DiscAutomorphism g(random_disc(rng), std::polar(1.0, -0.3 * i));
    Complex z = random_disc(rng, 0.9);
    CHECK(std::abs(f.inverse()(f(z)) - z) < 1e-12);
    CHECK(std::abs(f.after(g)(z) - f(g(z))) < 1e-12);
  }
  std::vector<Complex> x{0.5, Complex(0, -0.25)};
  auto P = PolydiscAutomorphism::moving_to_origin(x);
  auto o = P(x);
  CHECK(std::abs(o[0]) + std::abs(o[1]) < 1e-16);
  auto back = P.inverse()(o);
  CHECK(std::abs(back[1] - x[1]) < 1e-15);
  CHECK_THROWS(DiscAutomorphism(0.1, 2.0));
}
