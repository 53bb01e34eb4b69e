#include <cmath>
#include <random>

#include "doctest.h"
#include "pickpoly/moebius.hpp"
#include "pickpoly/pick.hpp"

using namespace pickpoly;
using namespace pickpoly::pick;

namespace {
Complex random_disc(std::mt19937_64& rng, double rmax = 0.9) {
  std::uniform_real_distribution<double> u(0, 1);
  return std::polar(rmax * std::sqrt(u(rng)), 2 * M_PI * u(rng));
}

// independent 2x2 Pick determinant
double pick_det(Complex a1, Complex a2, Complex b1, Complex b2) {
  auto e = [](Complex x, Complex y, Complex u, Complex v) { return (1.0 - u * std::conj(v)) / (1.0 - x * std::conj(y)); };
  return (e(a1, a1, b1, b1) * e(a2, a2, b2, b2) - e(a1, a2, b1, b2) * e(a2, a1, b2, b1)).real();
}
}  // namespace

TEST_CASE("pick matrix entries") {
  auto m = pick_matrix({{0.0, 0.5}, {0.0, 0.5}});
  CHECK((m.entries - Eigen::MatrixXcd::Ones(2, 2)).norm() < 1e-15);
  auto m2 = pick_matrix({{0.0, 0.5}, {0.0, 0.25}});
  CHECK(std::abs(m2(1, 1) - 1.25) < 1e-15);
  CHECK(std::abs(m2(0, 1) - 1.0) < 1e-15);
  auto m3 = pick_matrix({{0.1, Complex(0, 0.3), -0.5}, {0.1, Complex(0, 0.3), -0.5}});
  CHECK((m3.entries - Eigen::MatrixXcd::Ones(3, 3)).norm() < 1e-15);
  CHECK_THROWS(pick_matrix({{0.2, 0.2}, {0.0, 0.1}}));
}

TEST_CASE("ratio matrix") {
  std::vector<Complex> x1{0.5, 0.0}, x2{1.0 / 3, 0.0};
  auto z = theorem_matrix(x1, x2, 1.0, 1.0, 0);
  CHECK(z.entries.norm() == 0.0);
  auto ones = theorem_matrix(x1, x2, 0.5, 1.0 / 3, 0);
  CHECK((ones.entries - Eigen::MatrixXcd::Ones(2, 2)).norm() < 1e-15);
  auto c0 = theorem_matrix(x1, x2, 0.0, 0.0, 0);
  CHECK(std::abs(c0(0, 0) - 4.0 / 3) < 1e-15);
  CHECK(std::abs(c0(0, 1) - 6.0 / 5) < 1e-15);
  CHECK(std::abs(c0(1, 1) - 9.0 / 8) < 1e-15);
  CHECK_THROWS_WITH(theorem_matrix(x1, x2, 0.0, 0.0, 1), doctest::Contains("coordinate l degenerate"));
}

TEST_CASE("psd check") {
  HermitianMatrix ones{Eigen::MatrixXcd::Ones(2, 2)};
  auto v = psd_check(ones);
  CHECK(v.is_psd);
  CHECK(v.rank == 1);
  auto z = psd_check(HermitianMatrix{Eigen::MatrixXcd::Zero(2, 2)});
  CHECK(z.is_psd);
  CHECK(z.rank == 0);
  Eigen::MatrixXcd b(2, 2);
  b << 1, 2, 2, 1;
  auto n = psd_check(HermitianMatrix{b});
  CHECK_FALSE(n.is_psd);
  CHECK(n.min_eigenvalue == doctest::Approx(-1));
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Identity(3, 3);
  c(2, 2) = 0;
  CHECK(psd_check(HermitianMatrix{c}).rank == 2);
}

TEST_CASE("normalize and deflate examples") {
  DiscData d{{0.25, 0.5}, {1.0 / 3, 0.2}};
  auto n = moebius_normalize_data(d);
  CHECK(n.nodes[1] == 0.0);
  CHECK(n.targets[1] == 0.0);
  DiscData already{{0.3, 0.0}, {0.1, 0.0}};
  auto same = moebius_normalize_data(already);
  CHECK(std::abs(same.nodes[0] - 0.3) < 1e-16);
  CHECK(std::abs(same.targets[0] - 0.1) < 1e-16);

  auto d1 = deflate_data({{0.5, 0.0}, {0.25, 0.0}});
  REQUIRE(d1.data);
  CHECK(std::abs(d1.data->targets[0] - 0.5) < 1e-16);
  auto d2 = deflate_data({{0.5, 0.0}, {0.5, 0.0}});
  REQUIRE(d2.data);
  CHECK(std::abs(d2.data->targets[0] - 1.0) < 1e-16);
  auto d3 = deflate_data({{0.5, 0.0}, {std::polar(0.9, 0.4), 0.0}});
  CHECK(d3.infeasible);
  CHECK_FALSE(d3.data);
  CHECK_THROWS_WITH(deflate_data({{0.0, 0.0}, {0.0, 0.0}}), doctest::Contains("deflation undefined"));
}

TEST_CASE("two point feasibility") {
  std::vector<Complex> x1{0.5, 0.0}, x2{0.0, 0.0};
  CHECK(two_point_feasible(x1, x2, 0.5, 0.0));
  CHECK_FALSE(two_point_feasible(x1, x2, 0.9, 0.0));
  CHECK(two_point_feasible(x1, x2, Complex(0.2, 0.7), Complex(0.2, 0.7)));
}

TEST_CASE("two point blaschke worked examples") {
  auto b1 = two_point_blaschke(0.0, 0.5, 0.0, 0.5);
  CHECK(b1.degree() == 1);
  CHECK(b1.constant == Complex(1.0));
  CHECK(b1.zeros[0] == Complex(0.0));
  CHECK(!std::signbit(b1.zeros[0].real()));
  auto b2 = two_point_blaschke(0.0, 0.5, 0.0, 0.25);
  CHECK(b2.degree() == 2);
  CHECK(b2.constant == Complex(1.0));
  CHECK(b2.zeros == std::vector<Complex>{0.0, 0.0});
  auto c = two_point_blaschke(0.1, 0.4, Complex(0, 1), Complex(0, 1));
  CHECK(c.degree() == 0);
  CHECK(std::abs(c.constant - Complex(0, 1)) < 1e-15);
  CHECK_THROWS_WITH(two_point_blaschke(0.0, 0.1, 0.0, 0.9), doctest::Contains("two-point Pick infeasible"));
}

TEST_CASE("random two point blaschke") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  int degree_one = 0;
  for (int i = 0; i < 500; ++i) {
    Complex a1 = random_disc(rng), a2 = random_disc(rng), b1 = random_disc(rng), b2;
    if (i % 3 == 0) {
      // automorphism data: rank 1
      moebius::DiscAutomorphism m(random_disc(rng), std::polar(1.0, 2 * M_PI * u(rng)));
      b1 = m(a1);
      b2 = m(a2);
    } else {
      // shrink b2 toward b1 in the pseudohyperbolic metric until feasible
      const double r = moebius::rho(a1, a2) * u(rng);
      b2 = moebius::psi_inv(b1, std::polar(r, 2 * M_PI * u(rng)));
    }
    const double det = pick_det(a1, a2, b1, b2);
    auto B = two_point_blaschke(a1, a2, b1, b2);
    CHECK(std::abs(B(a1) - b1) < 1e-11);
    CHECK(std::abs(B(a2) - b2) < 1e-11);
    CHECK(B.degree() == psd_check(pick_matrix({{a1, a2}, {b1, b2}})).rank);
    if (i % 3 == 0) {
      CHECK(B.degree() == 1);
      ++degree_one;
    } else if (det > 1e-8) {
      CHECK(B.degree() == 2);
    }
    for (int k = 0; k < 64; ++k) CHECK(std::abs(std::abs(B(std::polar(1.0, 2 * M_PI * k / 64))) - 1) < 1e-10);
  }
  CHECK(degree_one > 100);
}

TEST_CASE("invariance under normalization and deflation") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> size(2, 4);
  std::uniform_real_distribution<double> u(0, 1);
  int psd_count = 0, disagreements = 0;
  for (int i = 0; i < 500; ++i) {
    DiscData d;
    const int n = size(rng);
    // half the instances come from a disc self-map so that PSD cases occur
    moebius::DiscAutomorphism m(random_disc(rng), std::polar(1.0, 2 * M_PI * u(rng)));
    const double shrink = 0.6 + 0.5 * u(rng);
    for (int j = 0; j < n; ++j) {
      Complex a = random_disc(rng);
      d.nodes.push_back(a);
      d.targets.push_back(i % 2 ? m(a) * std::min(shrink, 1.0) : random_disc(rng));
    }
    const bool base = psd_check(pick_matrix(d)).is_psd;
    psd_count += base;
    auto nd = moebius_normalize_data(d);
    if (psd_check(pick_matrix(nd)).is_psd != base) ++disagreements;
    auto defl = deflate_data(nd);
    const bool deflated = defl.data && psd_check(pick_matrix(*defl.data)).is_psd;
    if (deflated != base) ++disagreements;
  }
  CHECK(disagreements == 0);
  CHECK(psd_count > 50);
}
