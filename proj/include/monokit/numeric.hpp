#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monokit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline Complex to_complex(const Rational& r) { return {to_double(r), 0.0}; }
inline Complex to_complex(const Complex& c) { return c; }

/// Parses "12", "-3/4", "0.125", "1e-3", "2.5E2" into an exact rational.
/// Decimal expansions are converted exactly (base-10).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

/// Exact complex rational, used where inputs must stay exact (file-supplied
/// residue matrices, rank fallbacks).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Complex to_complex() const { return {to_double(re), to_double(im)}; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Parses complex literals of the form "a", "bi", "a+bi", "a-bi", "i", "-i"
/// where a and b follow parse_rational.
GaussRational parse_gauss_rational(const std::string& text);

std::string to_string(const GaussRational& z);

/// Shortest round-trip text of a double complex, "a+bi".
std::string format_complex(Complex z);

}  // namespace monokit
