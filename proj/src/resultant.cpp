#include "monokit/resultant.hpp"

#include <utility>

namespace monokit {

Rational sylvester_determinant(const RatPoly& a, int deg_a, const RatPoly& b, int deg_b) {
  const int n = deg_a + deg_b;
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  // Rows hold coefficients from the highest power down.
  for (int r = 0; r < deg_b; ++r)
    for (int k = 0; k <= deg_a; ++k) m[r][r + k] = a.coeff(deg_a - k);
  for (int r = 0; r < deg_a; ++r)
    for (int k = 0; k <= deg_b; ++k) m[deg_b + r][r + k] = b.coeff(deg_b - k);

  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  RatPoly out;
  for (size_t i = n; i-- > 0;) {
    out = out * RatPoly(std::vector<Rational>{-xs[i], Rational(1)}) + RatPoly::constant(dd[i]);
  }
  return out;
}

RatPoly resultant_in_y(const BiPoly& f, const BiPoly& g) {
  const int dyf = f.degree_y();
  const int dyg = g.degree_y();
  if (dyf < 1 || dyg < 1)
    throw Error(ErrorKind::InvalidInput, "resultant_in_y needs positive y-degree on both inputs");
  if (f.coeff_y(dyf).is_zero() || g.coeff_y(dyg).is_zero())
    throw Error(ErrorKind::DegenerateLeadingCoefficient, "leading y-coefficient vanishes identically");

  const int bound = dyf * std::max(g.degree_x(), 0) + dyg * std::max(f.degree_x(), 0);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    Rational x(k);
    xs.push_back(x);
    ys.push_back(sylvester_determinant(f.at_x(x), dyf, g.at_x(x), dyg));
  }
  return interpolate(xs, ys);
}

RatPoly discriminant_in_y(const BiPoly& f) { return resultant_in_y(f, f.derivative_y()); }

}  // namespace monokit
