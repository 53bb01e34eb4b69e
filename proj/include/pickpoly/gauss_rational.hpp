#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "pickpoly/common.hpp"

namespace pickpoly::mpoly {

// Exact element of Q(i): a pair of arbitrary-precision rationals.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long value) : re_(value) {}  // NOLINT: implicit by design of a number type
  GaussRational(mpq_class re, mpq_class im = 0);

  // Every finite double is a dyadic rational, so this conversion is exact.
  static GaussRational from_complex(Complex z);
  // Parses a rational literal such as "-3/4", "2" or "0.125".
  static mpq_class parse_rational(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  // Sum of |re| + |im|; an upper bound on the modulus that stays rational.
  mpq_class l1_norm() const { return abs(re_) + abs(im_); }

  // "3/4", "-2" or "(1/2+3/4i)".
  std::string to_string() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Best rational approximation p/q with q <= max_denominator (continued fractions).
mpq_class rationalize(double x, long max_denominator);
GaussRational rationalize(Complex z, long max_denominator);

}  // namespace pickpoly::mpoly
