#include "monokit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace monokit {

CPoly to_complex(const RatPoly& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(to_complex(v));
  return CPoly(std::move(c));
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  std::vector<RatPoly> out;
  if (p.degree() < 1) return out;
  RatPoly f = p.monic();
  RatPoly d = f.derivative();
  RatPoly a = gcd(f, d);
  RatPoly b = f.divmod(a).first;
  RatPoly c = d.divmod(a).first;
  RatPoly e = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly g = gcd(b, e);
    out.push_back(g);
    b = b.divmod(g).first;
    c = e.divmod(g).first;
    e = c - b.derivative();
  }
  return out;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& coef,
                 const std::string& monomial) {
  if (coef == 0) return;
  Rational mag = coef < 0 ? Rational(-coef) : coef;
  if (first) {
    if (coef < 0) os << '-';
  } else {
    os << (coef < 0 ? " - " : " + ");
  }
  first = false;
  if (monomial.empty()) {
    os << to_string(mag);
  } else if (mag == 1) {
    os << monomial;
  } else {
    os << to_string(mag) << '*' << monomial;
  }
}

std::string power(char var, int e) {
  if (e == 0) return "";
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const RatPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) append_term(os, first, p.coeff(i), power(var, i));
  return os.str();
}

BiPoly::BiPoly(std::map<Key, Rational> terms) {
  for (auto& [k, v] : terms)
    if (v != 0) terms_.emplace(k, std::move(v));
}

BiPoly BiPoly::inverse_relation(const RatPoly& p) {
  std::map<Key, Rational> t;
  for (int j = 0; j <= p.degree(); ++j)
    if (p.coeff(j) != 0) t[{0, j}] = p.coeff(j);
  t[{1, 0}] += Rational(-1);
  return BiPoly(std::move(t));
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.second);
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, v] : terms_) d = std::max(d, k.first);
  return d;
}

RatPoly BiPoly::coeff_y(int j) const {
  std::vector<Rational> c(static_cast<size_t>(std::max(degree_x(), 0)) + 1, Rational(0));
  for (const auto& [k, v] : terms_)
    if (k.second == j) c[k.first] = v;
  return RatPoly(std::move(c));
}

BiPoly BiPoly::derivative_y() const {
  std::map<Key, Rational> t;
  for (const auto& [k, v] : terms_)
    if (k.second > 0) t[{k.first, k.second - 1}] = v * k.second;
  return BiPoly(std::move(t));
}

BiPoly BiPoly::derivative_x() const {
  std::map<Key, Rational> t;
  for (const auto& [k, v] : terms_)
    if (k.first > 0) t[{k.first - 1, k.second}] = v * k.first;
  return BiPoly(std::move(t));
}

RatPoly BiPoly::at_x(const Rational& x) const {
  int dy = degree_y();
  std::vector<Rational> c(static_cast<size_t>(std::max(dy, 0)) + 1, Rational(0));
  for (int j = 0; j <= dy; ++j) c[j] = coeff_y(j).eval(x);
  return RatPoly(std::move(c));
}

BiPoly BiPoly::scaled(const Rational& s) const {
  std::map<Key, Rational> t;
  for (const auto& [k, v] : terms_) t[k] = v * s;
  return BiPoly(std::move(t));
}

std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending in y, then in x.
  std::vector<std::pair<BiPoly::Key, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  for (const auto& [k, v] : terms) {
    std::string mono = power('y', k.second);
    std::string xs = power('x', k.first);
    if (!mono.empty() && !xs.empty()) mono = xs + "*" + mono;
    else if (mono.empty()) mono = xs;
    append_term(os, first, v, mono);
  }
  return os.str();
}

BiPolyEvaluator::BiPolyEvaluator(const BiPoly& f) {
  int dy = f.degree_y();
  for (int j = 0; j <= dy; ++j) {
    RatPoly c = f.coeff_y(j);
    ycoef_.push_back(to_complex(c));
    ycoef_dx_.push_back(to_complex(c.derivative()));
  }
}

CPoly BiPolyEvaluator::at_x(Complex x) const {
  std::vector<Complex> c;
  c.reserve(ycoef_.size());
  for (const auto& p : ycoef_) c.push_back(p.eval(x));
  return CPoly(std::move(c));
}

CPoly BiPolyEvaluator::dx_at_x(Complex x) const {
  std::vector<Complex> c;
  c.reserve(ycoef_dx_.size());
  for (const auto& p : ycoef_dx_) c.push_back(p.eval(x));
  return CPoly(std::move(c));
}

}  // namespace monokit
