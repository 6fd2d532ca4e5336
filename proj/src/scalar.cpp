#include "isopar/scalar.hpp"

#include <sstream>

namespace isopar {

Scalar::Scalar(mpq_class a, mpq_class b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) {
    d_ = 0;
  } else if (d_ < 2) {
    fail(Error::Kind::internal, "scalar: irrational part without extension");
  }
}

long Scalar::unify_ext(const Scalar& x, const Scalar& y) {
  if (x.d_ != 0 && y.d_ != 0 && x.d_ != y.d_) {
    fail(Error::Kind::mixed_extension,
         "cannot mix sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
             std::to_string(y.d_) + ") in one computation");
  }
  return x.d_ != 0 ? x.d_ : y.d_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  long d = unify_ext(*this, o);
  return Scalar(a_ + o.a_, b_ + o.b_, d);
}

Scalar Scalar::operator-(const Scalar& o) const {
  long d = unify_ext(*this, o);
  return Scalar(a_ - o.a_, b_ - o.b_, d);
}

Scalar Scalar::operator*(const Scalar& o) const {
  long d = unify_ext(*this, o);
  if (d == 0) return Scalar(a_ * o.a_);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
  return Scalar(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + o.a_ * b_, d);
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Error::Kind::precondition, "division by zero scalar");
  if (d_ == 0) return Scalar(mpq_class(1) / a_);
  // 1/(a + b s) = (a - b s) / (a^2 - b^2 d); the norm is nonzero because
  // sqrt(d) is irrational for square-free d >= 2.
  mpq_class norm = a_ * a_ - b_ * b_ * d_;
  return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

long Scalar::squarefree_part(mpz_class t, mpz_class& s) {
  if (t <= 0) fail(Error::Kind::precondition, "squarefree_part needs t > 0");
  s = 1;
  mpz_class d = 1;
  for (mpz_class p = 2; p * p <= t; ++p) {
    if (p > 1000000) {
      fail(Error::Kind::unsupported,
           "square-free decomposition beyond desk-scale trial division");
    }
    while (t % (p * p) == 0) {
      t /= p * p;
      s *= p;
    }
    if (t % p == 0) {
      t /= p;
      d *= p;
    }
  }
  d *= t;
  return static_cast<long>(d.get_si());
}

Scalar Scalar::inv_sqrt(const mpq_class& r) {
  if (r <= 0) fail(Error::Kind::precondition, "inv_sqrt needs r > 0");
  // 1/sqrt(num/den) = sqrt(num*den)/num.  Write num*den = s^2 * d.
  mpz_class t = r.get_num() * r.get_den();
  mpz_class s;
  long d = squarefree_part(t, s);
  mpq_class coef(s, r.get_num());
  coef.canonicalize();
  if (d == 1) return Scalar(coef);
  return Scalar(0, coef, d);
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  auto sqrt_piece = [&](const mpq_class& c) {
    if (c == 1) {
      out << "sqrt(" << d_ << ")";
    } else if (c == -1) {
      out << "-sqrt(" << d_ << ")";
    } else {
      out << c << "*sqrt(" << d_ << ")";
    }
  };
  if (b_ == 0) {
    out << a_;
  } else if (a_ == 0) {
    sqrt_piece(b_);
  } else {
    out << a_;
    if (b_ > 0) out << "+";
    sqrt_piece(b_);
  }
  return out.str();
}

CScalar CScalar::operator/(const CScalar& o) const {
  if (o.is_zero())
    fail(Error::Kind::precondition, "division by zero complex scalar");
  Scalar n = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

std::string CScalar::str() const {
  if (im.is_zero()) return re.str();
  std::string s = re.is_zero() ? "" : re.str();
  std::string ims = im.str();
  if (!s.empty() && !ims.empty() && ims[0] != '-') s += "+";
  if (ims == "1") return s + "i";
  if (ims == "-1") return s + "-i";
  return s + "(" + ims + ")*i";
}

}  // namespace isopar
