#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "monokit/errors.hpp"
#include "monokit/numeric.hpp"

namespace monokit {

template <typename U, typename T>
U scalar_cast(const T& v) {
  if constexpr (std::is_same_v<U, T>) {
    return v;
  } else if constexpr (std::is_same_v<U, Complex> && std::is_same_v<T, Rational>) {
    return to_complex(v);
  } else {
    return U(v);
  }
}

/// Dense univariate polynomial, coefficient i multiplies z^i. The coefficient
/// vector is kept trimmed: the zero polynomial has no coefficients, otherwise
/// the last entry is nonzero.
template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly monomial(T v, int power) {
    std::vector<T> c(static_cast<size_t>(power) + 1, T(0));
    c.back() = std::move(v);
    return Poly(std::move(c));
  }
  static Poly identity() { return Poly(std::vector<T>{T(0), T(1)}); }

  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  template <typename U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + scalar_cast<U>(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
    return Poly(std::move(d));
  }

  /// this(inner(z))
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return {};
    std::vector<T> c = c_;
    T lc = c.back();
    for (auto& v : c) v = v / lc;
    return Poly(std::move(c));
  }

  /// Euclidean division over a field: {quotient, remainder}.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
    std::vector<T> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<T> q(static_cast<size_t>(degree() - dd) + 1, T(0));
    for (int i = degree(); i >= dd; --i) {
      T f = r[i] / d.leading();
      q[i - dd] = f;
      if (f == T(0)) continue;
      for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
    }
    r.resize(static_cast<size_t>(dd));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<T> c = a.c_;
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T(0)) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) { return constant(s) * a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(int e) const {
    Poly r = constant(T(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using RatPoly = Poly<Rational>;
using CPoly = Poly<Complex>;

CPoly to_complex(const RatPoly& p);

/// Monic gcd over the rationals.
RatPoly gcd(RatPoly a, RatPoly b);

/// Yun's algorithm: returns factors f_1, f_2, ... with p = lc * prod f_i^i,
/// each f_i squarefree and monic (f_i may be 1).
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

/// Polynomial text in the toolkit syntax, e.g. "32*z^6 - 48*z^4 + 18*z^2 - 1".
std::string to_string(const RatPoly& p, char var = 'z');

/// Bivariate polynomial with rational coefficients, keyed by (power of x, power of y).
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  explicit BiPoly(std::map<Key, Rational> terms);

  /// p(y) - x, the relation whose y-solutions are the branches of p^{-1}(x).
  static BiPoly inverse_relation(const RatPoly& p);

  const std::map<Key, Rational>& terms() const { return terms_; }
  int degree_y() const;
  int degree_x() const;
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of y^j as a polynomial in x.
  RatPoly coeff_y(int j) const;
  BiPoly derivative_y() const;
  BiPoly derivative_x() const;
  /// Specialise x, giving a polynomial in y.
  RatPoly at_x(const Rational& x) const;

  BiPoly scaled(const Rational& s) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, Rational> terms_;
};

std::string to_string(const BiPoly& f);

/// Complex evaluator for f(x, y) and its partial derivatives: the
/// y-coefficients are kept as complex polynomials in x.
class BiPolyEvaluator {
 public:
  explicit BiPolyEvaluator(const BiPoly& f);

  int degree_y() const { return static_cast<int>(ycoef_.size()) - 1; }
  /// f(x, .) as a polynomial in y.
  CPoly at_x(Complex x) const;
  /// d f / d x (x, .) as a polynomial in y.
  CPoly dx_at_x(Complex x) const;

 private:
  std::vector<CPoly> ycoef_;
  std::vector<CPoly> ycoef_dx_;
};

}  // namespace monokit
