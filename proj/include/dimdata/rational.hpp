#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace dimdata {

/// Exact rational scalar used throughout the library.
using Rat = mpq_class;

/// mpq_class lacks a long long constructor; route through mpz.
inline Rat rat_ll(long long v) {
  mpz_class z;
  if (v >= -0x7FFFFFFFL && v <= 0x7FFFFFFFL) {
    z = static_cast<long>(v);
  } else {
    z = mpz_class(std::to_string(v));
  }
  return Rat(z);
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  r.canonicalize();
  return r;
}

/// Renders as "p" or "p/q" (the form used in all JSON output).
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + r.get_str());
  return r.get_num().get_si();
}

/// r^e for integer e of either sign; r must be nonzero when e < 0.
inline Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  if (inv && r == 0) throw std::domain_error("0 raised to a negative power");
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num = inv ? r.get_den() : r.get_num();
  mpz_class den = inv ? r.get_num() : r.get_den();
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
  Rat out(pn, pd);
  out.canonicalize();  // sign normalization when inverting a negative
  return out;
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rat(sn, sd);
}

/// Element of Q(i), the rationals extended by a square root of -1.
/// The base field of the explicit orthogonal-matrix model.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }
  GaussRat conj() const { return GaussRat(re, -im); }
  Rat norm() const { return re * re + im * im; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rat n = o.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    GaussRat c = o.conj();
    *this *= c;
    re /= n;
    im /= n;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return a.im < b.im;
  }
};

/// Renders as "a", "bi" or "a+bi" with exact rational parts.
inline std::string gauss_to_string(const GaussRat& z) {
  if (z.im == 0) return rat_to_string(z.re);
  std::string s;
  if (z.re != 0) {
    s = rat_to_string(z.re);
    if (z.im > 0) s += "+";
  }
  s += rat_to_string(z.im) + "i";
  return s;
}

GaussRat gauss_from_string(const std::string& s);

/// Exact square root in Q(i) when one exists.
inline std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
  // (x+yi)^2 = z needs |z| rational, then x^2 = (re+|z|)/2, y^2 = (|z|-re)/2.
  auto n = rat_sqrt(z.norm());
  if (!n) return std::nullopt;
  auto x2 = rat_sqrt((z.re + *n) / 2);
  if (!x2) return std::nullopt;
  auto y2 = rat_sqrt((*n - z.re) / 2);
  if (!y2) return std::nullopt;
  GaussRat w(*x2, (z.im >= 0) ? *y2 : -*y2);
  if (w * w == z) return w;
  return std::nullopt;
}

}  // namespace dimdata
