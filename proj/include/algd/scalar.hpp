#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace algd {

/// Ground field tag. Q = rationals, QI = Gaussian rationals (needed for
/// star structures, where conjugation acts on the imaginary part).
enum class Field { Q, QI };

inline const char* to_string(Field f) { return f == Field::Q ? "q" : "qi"; }

inline Field field_from_string(const std::string& s) {
  if (s == "q") return Field::Q;
  if (s == "qi") return Field::QI;
  throw std::invalid_argument("unknown field tag: " + s);
}

/// Exact Gaussian rational re + im*i. Over Field::Q the imaginary part is
/// identically zero; arithmetic never rounds.
struct Scalar {
  mpq_class re, im;

  Scalar() : re(0), im(0) {}
  Scalar(long v) : re(v), im(0) {}
  Scalar(mpq_class r) : re(std::move(r)), im(0) {}
  Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    mpq_class n = b.re * b.re + b.im * b.im;
    if (sgn(n) == 0) throw std::domain_error("division by zero scalar");
    return Scalar((a.re * b.re + a.im * b.im) / n,
                  (a.im * b.re - a.re * b.im) / n);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline Scalar scalar_i() { return Scalar(mpq_class(0), mpq_class(1)); }

/// Parses "p/q" or "p" with q > 0, gcd(p,q) = 1 after canonicalization.
mpq_class parse_rational(const std::string& text);

/// Canonical "p/q" (or "p" when q = 1).
std::string rational_to_string(const mpq_class& q);

}  // namespace algd
