#include "pickpoly/rif.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pickpoly/moebius.hpp"
#include "pickpoly/poly_algebra.hpp"
#include "pickpoly/roots.hpp"

namespace pickpoly::rif {

using mpoly::Irreducibility;

namespace {

constexpr double kPoleTol = 1e-14;

double frac(double x) { return x - std::floor(x); }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Complex> random_torus(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Complex> w(n);
  for (auto& x : w) x = std::polar(1.0, 2 * M_PI * u(rng));
  return w;
}

}  // namespace

Unimodular Unimodular::exact(const GaussRational& v) {
  if (v.norm() != 1) throw DomainError("constant is not unimodular");
  Unimodular u;
  u.v_ = v;
  return u;
}

Unimodular Unimodular::turns(double t) {
  if (!std::isfinite(t)) throw DomainError("non-finite angle");
  Unimodular u;
  u.v_ = frac(t);
  return u;
}

Unimodular Unimodular::from_complex(Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-9) throw DomainError("constant is not unimodular");
  const GaussRational r = mpoly::rationalize(z, 1000000);
  if (r.norm() == 1 && std::abs(r.to_complex() - z) < 1e-12) return exact(r);
  return turns(std::arg(z) / (2 * M_PI));
}

double Unimodular::angle_turns() const {
  if (is_exact()) return frac(std::arg(exact_value().to_complex()) / (2 * M_PI));
  return std::get<double>(v_);
}

Complex Unimodular::value() const {
  if (is_exact()) return exact_value().to_complex();
  return std::polar(1.0, 2 * M_PI * std::get<double>(v_));
}

Unimodular Unimodular::conj() const {
  if (is_exact()) return exact(exact_value().conj());
  return turns(-std::get<double>(v_));
}

Unimodular operator*(const Unimodular& a, const Unimodular& b) {
  if (a.is_exact() && b.is_exact()) return Unimodular::exact(a.exact_value() * b.exact_value());
  return Unimodular::turns(a.angle_turns() + b.angle_turns());
}

bool Unimodular::approx_equal(const Unimodular& o, double tol) const { return std::abs(value() - o.value()) < tol; }

RationalInner::RationalInner(Unimodular a, MultiIndex beta, CPoly q, Provenance provenance)
    : a_(std::move(a)), beta_(std::move(beta)), q_(std::move(q)), provenance_(provenance) {
  if (q_.is_zero()) throw DomainError("zero denominator");
  if (beta_.size() != q_.nvars()) throw DomainError("beta length differs from the variable count");
  if (q_.constant_term().is_zero()) throw DomainError("denominator vanishes at the origin");
  if (!mpoly::nu(q_).divides(beta_)) throw DomainError("beta must dominate nu(Q)");
  num_ = std::make_shared<const mpoly::HornerPoly>(numerator());
  den_ = std::make_shared<const mpoly::HornerPoly>(q_);
}

RationalInner RationalInner::coordinate(std::size_t n, std::size_t j) {
  if (j >= n) throw DomainError("coordinate index out of range");
  return {Unimodular(), MultiIndex::unit(n, j), CPoly::constant(n, 1), Provenance::Verified};
}

RationalInner RationalInner::constant(std::size_t n, Unimodular a) {
  return {std::move(a), MultiIndex(n), CPoly::constant(n, 1), Provenance::Verified};
}

RationalInner RationalInner::from_denominator(CPoly q, Provenance provenance) {
  MultiIndex beta = mpoly::nu(q);
  return {Unimodular(), std::move(beta), std::move(q), provenance};
}

RationalInner RationalInner::verified(Unimodular a, MultiIndex beta, CPoly q, const mpoly::ZeroFreeOptions& opt) {
  const auto v = mpoly::zero_free_on_polydisc(q, opt);
  if (v.status == mpoly::ZeroFreeStatus::ZeroFound) throw DomainError("denominator has a zero in the polydisc");
  if (v.status != mpoly::ZeroFreeStatus::Verified) throw Error("zero-freeness of the denominator not verified");
  return {std::move(a), std::move(beta), std::move(q), Provenance::Verified};
}

CPoly RationalInner::numerator() const { return mpoly::reflect(q_).shift(beta_ - mpoly::nu(q_)); }

bool RationalInner::is_constant() const {
  if (!(beta_ == mpoly::nu(q_))) return false;
  const CPoly r = mpoly::reflect(q_);
  return r * q_.leading_term().second == q_ * r.leading_term().second;
}

Complex RationalInner::operator()(std::span<const Complex> z) const {
  if (z.size() != nvars()) throw DomainError("dimension mismatch");
  for (Complex x : z)
    if (!moebius::in_disc(x)) throw DomainError("evaluation point outside the open polydisc");
  const Complex d = (*den_)(z);
  if (std::abs(d) < kPoleTol) throw DomainError("pole proximity");
  return a_.value() * (*num_)(z) / d;
}

RationalInner multiply(const RationalInner& f, const RationalInner& g) {
  if (f.nvars() != g.nvars()) throw DomainError("dimension mismatch");
  const Provenance p =
      f.provenance() == Provenance::Verified && g.provenance() == Provenance::Verified ? Provenance::Verified
                                                                                       : Provenance::Asserted;
  return {f.A() * g.A(), f.beta() + g.beta(), f.Q() * g.Q(), p};
}

Complex eval_inner(const RationalInner& f, std::span<const Complex> z) { return f(z); }

RationalInner Canonical::as_inner(Provenance p) const {
  return {C, monomial + mpoly::nu(Qhat), Qhat, p};
}

Canonical canonicalize(const RationalInner& f) {
  if (f.is_constant()) throw DomainError("canonicalization needs a nonconstant function");
  const std::size_t n = f.nvars();
  Canonical out;
  out.monomial = f.beta() - mpoly::nu(f.Q());
  out.Qhat = CPoly::constant(n, 1);
  if (f.Q().is_constant()) {
    const GaussRational k = f.Q().constant_term();
    out.C = f.A() * Unimodular::exact(k.conj() / k);
    return out;
  }
  const auto fac = mpoly::factor(f.Q());
  if (fac.status != mpoly::FactorStatus::Complete) throw CanonicalizationUnavailable();
  out.confidence = fac.confidence;
  out.C = f.A() * Unimodular::exact(fac.constant.conj() / fac.constant);
  for (const auto& t : fac.factors) {
    const CPoly r = mpoly::reflect(t.poly);
    const GaussRational lambda = r.leading_term().second / t.poly.leading_term().second;
    if (r == t.poly * lambda) {
      // reflect(Q_i) / Q_i is the constant lambda
      for (int m = 0; m < t.multiplicity; ++m) out.C = out.C * Unimodular::exact(lambda);
      continue;
    }
    out.Qhat = out.Qhat * t.poly.pow(static_cast<unsigned>(t.multiplicity));
    out.factors.push_back(t);
  }
  if (!out.Qhat.is_constant() && !mpoly::gcd(mpoly::reflect(out.Qhat), out.Qhat).is_constant())
    throw Error("internal consistency: numerator and denominator share a factor");
  return out;
}

Irreducibility is_irreducible_inner(const RationalInner& f) {
  if (f.is_constant()) throw DomainError("irreducibility needs a nonconstant function");
  const MultiIndex m = f.beta() - mpoly::nu(f.Q());
  if (m.is_zero() && !mpoly::reflect(f.Q()).constant_term().is_zero())
    throw DomainError("corollary requires f(0)=0");
  Canonical c;
  try {
    c = canonicalize(f);
  } catch (const CanonicalizationUnavailable&) {
    return Irreducibility::Unknown;
  }
  if (c.Qhat.is_constant()) return c.monomial.total() == 1 ? Irreducibility::Irreducible : Irreducibility::Reducible;
  if (!c.monomial.is_zero()) return Irreducibility::Reducible;
  if (c.factors.size() != 1 || c.factors[0].multiplicity != 1) return Irreducibility::Reducible;
  if (!c.factors[0].irreducible) return Irreducibility::Unknown;
  return mpoly::is_deficient(c.Qhat) ? Irreducibility::Irreducible : Irreducibility::Reducible;
}

InnerFactorization factor_inner(const RationalInner& f) {
  const Canonical c = canonicalize(f);
  const std::size_t n = f.nvars();
  InnerFactorization out;
  out.constant = c.C;
  for (std::size_t j = 0; j < n; ++j)
    for (int k = 0; k < c.monomial[j]; ++k) out.factors.push_back(RationalInner::coordinate(n, j));
  for (const auto& t : c.factors)
    for (int k = 0; k < t.multiplicity; ++k) out.factors.push_back(RationalInner::from_denominator(t.poly, f.provenance()));

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0, 1);
  int checked = 0;
  for (int s = 0; s < 1000 && checked < 100; ++s) {
    std::vector<Complex> z(n);
    for (auto& x : z) x = std::polar(0.95 * std::sqrt(u(rng)), 2 * M_PI * u(rng));
    try {
      Complex prod = out.constant.value();
      for (const auto& g : out.factors) prod *= g(z);
      out.max_deviation = std::max(out.max_deviation, std::abs(prod - f(z)));
      ++checked;
    } catch (const DomainError&) {
    }
  }
  if (out.max_deviation > 1e-10) throw Error("inner factorization failed its numeric check");
  return out;
}

pick::BlaschkeProduct slice(const RationalInner& f, std::span<const Complex> w) {
  const std::size_t n = f.nvars();
  if (w.size() != n) throw DomainError("dimension mismatch");
  for (Complex x : w)
    if (std::abs(std::abs(x) - 1.0) > 1e-12) throw DomainError("slice direction must lie on the torus");

  const int d = f.Q().total_degree();
  std::vector<Complex> c(static_cast<std::size_t>(d) + 1);  // Q(zeta w) = sum c_k zeta^k
  double scale = 0;
  for (const auto& [alpha, a] : f.Q().terms()) {
    Complex v = a.to_complex();
    scale += std::abs(v);
    for (std::size_t k = 0; k < n; ++k)
      if (alpha[k]) v *= std::pow(w[k], alpha[k]);
    c[static_cast<std::size_t>(alpha.total())] += v;
  }
  if (d > 0 && std::abs(c[static_cast<std::size_t>(d)]) < 1e-10 * scale) throw DomainError("degenerate slice direction");

  // a_j = 1/rho_j are the roots of the reversed polynomial, whose leading term is Q(0)
  std::vector<Complex> rev(c.rbegin(), c.rend());
  Complex k = f.A().value() * std::conj(c[0]) / c[0];
  for (std::size_t j = 0; j < n; ++j) k *= std::pow(w[j], f.beta()[j]);
  pick::BlaschkeProduct b;
  for (Complex a : mpoly::univariate_roots(rev)) {
    const double r = std::abs(a);
    if (r < 1 - 1e-8) {
      b.zeros.push_back(std::conj(a));
    } else if (r <= 1 + 1e-8) {
      k *= -std::conj(a) / r;
    } else {
      throw DomainError("denominator vanishes inside the polydisc on this slice");
    }
  }
  for (int z = 0; z < f.beta().total() - d; ++z) b.zeros.push_back(0.0);
  b.constant = k / std::abs(k);
  return b;
}

std::vector<Complex> find_zero(const RationalInner& f, std::uint64_t seed, int max_directions) {
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  const std::size_t n = f.nvars();
  std::vector<double> step(n), offset(n);
  for (std::size_t k = 0; k < n; ++k) {
    step[k] = frac(std::sqrt(static_cast<double>(kPrimes[k % 16])) * static_cast<double>(k / 16 + 1));
    offset[k] = static_cast<double>(splitmix(seed + k) >> 11) * 0x1.0p-53;
  }
  std::vector<Complex> w(n);
  for (int i = 1; i <= max_directions; ++i) {
    for (std::size_t k = 0; k < n; ++k) w[k] = std::polar(1.0, 2 * M_PI * frac(offset[k] + i * step[k]));
    pick::BlaschkeProduct b;
    try {
      b = slice(f, w);
    } catch (const DomainError&) {
      continue;
    }
    if (b.degree() == 0) continue;
    const Complex zeta = *std::min_element(b.zeros.begin(), b.zeros.end(),
                                           [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = zeta * w[k];
    try {
      if (std::abs(f(z)) < 1e-10) return z;
    } catch (const DomainError&) {
    }
  }
  throw Error("no zero found within budget");
}

InnerReport verify_inner_numeric(const PolydiscMap& f, std::size_t n, int samples, std::vector<double> radii,
                                 std::uint64_t seed) {
  InnerReport rep;
  rep.radii = std::move(radii);
  rep.deviations.assign(rep.radii.size(), 0.0);
  std::mt19937_64 rng(seed);
  std::vector<Complex> z(n);
  for (int s = 0; s < samples; ++s) {
    const auto w = random_torus(rng, n);
    try {
      for (std::size_t i = 0; i < rep.radii.size(); ++i) {
        for (std::size_t k = 0; k < n; ++k) z[k] = rep.radii[i] * w[k];
        rep.deviations[i] = std::max(rep.deviations[i], std::abs(std::abs(f(z)) - 1.0));
      }
      ++rep.samples;
    } catch (const DomainError&) {
      ++rep.skipped;
    }
  }
  // boundary values of modulus one: the worst deviation has to shrink at least
  // geometrically as r -> 1, singular boundary points included
  rep.decreasing = true;
  for (std::size_t i = 1; i < rep.deviations.size(); ++i)
    if (!(rep.deviations[i] <= 0.5 * rep.deviations[i - 1] || rep.deviations[i] < 1e-9)) rep.decreasing = false;
  rep.pass = rep.decreasing && rep.samples > 0 && !rep.deviations.empty();
  return rep;
}

InnerReport verify_inner_numeric(const RationalInner& f, int samples, std::vector<double> radii, std::uint64_t seed) {
  return verify_inner_numeric([&f](std::span<const Complex> z) { return f(z); }, f.nvars(), samples, std::move(radii),
                              seed);
}

}  // namespace pickpoly::rif
