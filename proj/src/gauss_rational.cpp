#include "pickpoly/gauss_rational.hpp"

#include <cmath>

namespace pickpoly::mpoly {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::from_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("non-finite complex value cannot be made exact");
  }
  return {mpq_class(z.real()), mpq_class(z.imag())};
}

mpq_class GaussRational::parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal", 0);
  std::string s(text);
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw ParseError("mixed decimal and fraction", dot);
    // 12.375 -> 12375/1000
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    mpz_class den = 1;
    for (std::size_t k = 0; k < scale; ++k) den *= 10;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw ParseError("malformed decimal '" + s + "'", 0);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  q.canonicalize();
  return q;
}

GaussRational GaussRational::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw DomainError("division by zero");
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw DomainError("division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return "(" + im_.get_str() + "i)";
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + im_.get_str() + "i)";
}

mpq_class rationalize(double x, long max_denominator) {
  if (!std::isfinite(x)) throw DomainError("cannot rationalize a non-finite value");
  // Continued-fraction convergents; stop before the denominator bound is exceeded.
  const bool negative = x < 0;
  long double v = std::fabs(static_cast<long double>(x));
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a_ld = std::floor(v);
    if (a_ld > 1e18L) break;
    const mpz_class a(static_cast<double>(a_ld));
    const mpz_class p2 = a * p1 + p0;
    const mpz_class q2 = a * q1 + q0;
    if (q2 > max_denominator) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const long double frac = v - a_ld;
    if (frac < 1e-18L) break;
    v = 1.0L / frac;
  }
  if (q1 == 0) return 0;
  mpq_class out(p1, q1);
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

GaussRational rationalize(Complex z, long max_denominator) {
  return {rationalize(z.real(), max_denominator), rationalize(z.imag(), max_denominator)};
}

}  // namespace pickpoly::mpoly
