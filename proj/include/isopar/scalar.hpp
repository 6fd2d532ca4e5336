#pragma once

#include <gmpxx.h>

#include <string>

#include "isopar/error.hpp"

namespace isopar {

// Exact scalar: a + b*sqrt(d) with a, b arbitrary-precision rationals and d a
// fixed square-free integer >= 2.  d == 0 encodes the pure-rational case and
// forces b == 0.  Two scalars with different nonzero d never mix; arithmetic
// on them throws mixed_extension.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(long n) : a_(n), b_(0), d_(0) {}
  Scalar(const mpq_class& q) : a_(q), b_(0), d_(0) { a_.canonicalize(); }
  Scalar(mpq_class a, mpq_class b, long d);

  static Scalar sqrt_of(long d) { return Scalar(0, 1, d); }
  // 1/sqrt(r) for rational r > 0, expressed exactly as s*sqrt(d) (d possibly 1
  // meaning rational).  Throws unsupported if the square-free part cannot be
  // extracted by trial division at desk scale.
  static Scalar inv_sqrt(const mpq_class& r);

  const mpq_class& rat() const { return a_; }
  const mpq_class& irr() const { return b_; }
  long ext() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }
  bool is_rational() const { return d_ == 0; }

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  // Galois conjugate a - b*sqrt(d).
  Scalar conj() const { return Scalar(a_, -b_, d_); }

  bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text: "0", "-5/9", "sqrt(2)", "3/4*sqrt(2)", "1/2+3/4*sqrt(2)".
  std::string str() const;
  // True when str() needs parentheses inside a product (both parts nonzero).
  bool composite() const { return a_ != 0 && b_ != 0; }
  // True when the leading printed sign is '-' (only for one-part scalars).
  bool negative_leading() const {
    return !composite() && (a_ < 0 || (a_ == 0 && b_ < 0));
  }

  // t = s^2 * d with d square-free; returns d and sets s.  Trial division.
  static long squarefree_part(mpz_class t, mpz_class& s);

 private:
  static long unify_ext(const Scalar& x, const Scalar& y);
  mpq_class a_, b_;
  long d_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

// Complexification: re + i*im over the exact base field.  Used only by the
// pencil analysis; kept deliberately minimal.
struct CScalar {
  Scalar re, im;
  CScalar() = default;
  CScalar(Scalar r) : re(std::move(r)) {}
  CScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CScalar operator+(const CScalar& o) const { return {re + o.re, im + o.im}; }
  CScalar operator-(const CScalar& o) const { return {re - o.re, im - o.im}; }
  CScalar operator-() const { return {-re, -im}; }
  CScalar operator*(const CScalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CScalar operator/(const CScalar& o) const;
  bool operator==(const CScalar& o) const { return re == o.re && im == o.im; }
  std::string str() const;
};

}  // namespace isopar
