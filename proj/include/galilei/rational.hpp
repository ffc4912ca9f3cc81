#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace galilei {

/// Arbitrary-precision rational, always kept canonical.
using Rat = mpq_class;

inline Rat ratq(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("ratq: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

/// Gaussian rational: complex number with exact rational real and
/// imaginary parts. Field operations throughout; equality is exact.
struct GQ {
  Rat re, im;

  GQ() : re(0), im(0) {}
  GQ(long n) : re(n), im(0) {}
  GQ(const Rat& r) : re(r), im(0) {}
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  /// The imaginary unit times k.
  static GQ i(long k = 1) { return GQ(Rat(0), Rat(k)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GQ conj() const { return GQ(re, -im); }

  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GQ& operator*=(const GQ& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GQ& operator/=(const GQ& o);
};

inline GQ operator+(GQ a, const GQ& b) { return a += b; }
inline GQ operator-(GQ a, const GQ& b) { return a -= b; }
inline GQ operator*(GQ a, const GQ& b) { return a *= b; }
inline GQ operator/(GQ a, const GQ& b) { return a /= b; }
inline GQ operator-(const GQ& a) { return GQ(-a.re, -a.im); }
inline bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

inline GQ inverse(const GQ& z) {
  if (z.is_zero()) throw std::domain_error("GQ: division by zero");
  Rat n = z.re * z.re + z.im * z.im;
  return GQ(z.re / n, -z.im / n);
}

inline GQ& GQ::operator/=(const GQ& o) { return *this *= inverse(o); }

/// Renders as "a/b", "c/d*i" or "a/b+c/d*i" (minus signs folded in).
std::string to_string(const GQ& z);
GQ gq_from_string(const std::string& s);

}  // namespace galilei
