#include "monokit/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "monokit/errors.hpp"

namespace monokit {

namespace {

constexpr double kEndpointTol = 1e-9;

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); }

/// Finite points of the line L (A = 0) on the generalized circle K.
std::vector<Complex> line_meets(const GenCircle& l, const GenCircle& k, double tol) {
  const double bn = std::abs(l.B);
  const Complex p = -l.C * l.B / (2.0 * bn * bn);
  const Complex u = Complex(0.0, 1.0) * l.B / bn;
  const double qa = k.A;
  const double qb = 2.0 * k.A * (std::conj(p) * u).real() + 2.0 * (std::conj(k.B) * u).real();
  const double qc = k.eval(p);
  std::vector<Complex> out;
  if (std::abs(qa) <= tol * (std::abs(qb) + std::abs(qc) + 1e-300)) {
    if (std::abs(qb) > tol * std::abs(qc)) out.push_back(p - qc / qb * u);
    return out;
  }
  const double disc = qb * qb - 4.0 * qa * qc;
  const double scale = qb * qb + std::abs(4.0 * qa * qc);
  if (disc < -tol * scale) return out;
  if (disc <= tol * scale) {
    out.push_back(p + (-qb / (2.0 * qa)) * u);
    return out;
  }
  const double s = std::sqrt(disc);
  // Stable quadratic roots.
  const double t1 = (-qb - std::copysign(s, qb)) / (2.0 * qa);
  const double t2 = qc / (qa * t1);
  out.push_back(p + t1 * u);
  out.push_back(p + t2 * u);
  return out;
}

int moebius_order(const MoebiusLike& g, int cap, double tol) {
  MoebiusLike acc = g;
  const MoebiusLike id;
  for (int k = 1; k <= cap; ++k) {
    if (projective_distance(acc, id) <= tol) return k;
    acc = acc.after(g).normalized();
  }
  return 0;
}

std::string net_name(const std::vector<MoebiusLike>& rotations, double tol) {
  const int m = static_cast<int>(rotations.size());
  std::vector<int> orders;
  for (const auto& r : rotations) orders.push_back(moebius_order(r, m, tol));
  const int max_order = *std::max_element(orders.begin(), orders.end());
  const int involutions = static_cast<int>(std::count(orders.begin(), orders.end(), 2));
  if (max_order == m) return "pyramid";
  if (m % 2 == 0 && max_order == m / 2 && involutions >= m / 2) return "diheron";
  if (m == 12) return "tetrahedral";
  if (m == 24) return "octahedral";
  if (m == 60) return "icosahedral";
  return "finite(" + std::to_string(m) + ")";
}

}  // namespace

std::string ExtPoint::to_string() const { return infinite ? "inf" : format_complex(z); }

double chordal_distance(const ExtPoint& p, const ExtPoint& q) {
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite) return 2.0 / std::sqrt(1.0 + std::norm(q.z));
  if (q.infinite) return 2.0 / std::sqrt(1.0 + std::norm(p.z));
  return 2.0 * std::abs(p.z - q.z) / std::sqrt((1.0 + std::norm(p.z)) * (1.0 + std::norm(q.z)));
}

GenCircle GenCircle::circle(Complex center, double radius) {
  if (!(radius > 0)) throw Error(ErrorKind::InvalidInput, "circle radius must be positive");
  return {1.0, -center, std::norm(center) - radius * radius};
}

GenCircle GenCircle::line(Complex p1, Complex p2) {
  if (p1 == p2) throw Error(ErrorKind::InvalidInput, "line needs two distinct points");
  const Complex n = Complex(0.0, 1.0) * (p2 - p1);
  return {0.0, n, -2.0 * (std::conj(n) * p1).real()};
}

GenCircle GenCircle::normalized() const {
  const double s = std::norm(B) - A * C;
  if (!(s > 0) || !std::isfinite(s)) throw Error(ErrorKind::InvalidInput, "degenerate circle");
  const double k = 1.0 / std::sqrt(s);
  return {A * k, B * k, C * k};
}

bool GenCircle::is_line(double tol) const { return std::abs(normalized().A) <= tol; }

Complex GenCircle::center() const { return -B / A; }

double GenCircle::radius() const { return std::sqrt(std::norm(B) - A * C) / std::abs(A); }

double GenCircle::eval(Complex z) const { return A * std::norm(z) + 2.0 * (std::conj(B) * z).real() + C; }

bool GenCircle::contains(const ExtPoint& p, double tol) const {
  const GenCircle n = normalized();
  if (p.infinite) return std::abs(n.A) <= tol;
  return std::abs(n.eval(p.z)) <= tol * (1.0 + std::norm(p.z));
}

Matrix2c GenCircle::hermitian() const {
  Matrix2c h;
  h << A, B, std::conj(B), C;
  return h;
}

GenCircle GenCircle::from_hermitian(const Matrix2c& h) { return {h(0, 0).real(), h(0, 1), h(1, 1).real()}; }

Complex reflect(const GenCircle& c, Complex z) {
  const GenCircle n = c.normalized();
  const Complex den = -n.A * std::conj(z) - std::conj(n.B);
  if (std::abs(den) <= 1e-15 * (1.0 + std::abs(z)))
    throw Error(ErrorKind::PoleOfInversion, "reflection of the circle centre " + format_complex(z));
  return (n.B * std::conj(z) + n.C) / den;
}

ExtPoint reflect(const GenCircle& c, const ExtPoint& p) { return MoebiusLike::reflection(c).apply(p); }

std::vector<Complex> intersect(const GenCircle& a0, const GenCircle& b0, double tol) {
  const GenCircle a = a0.normalized(), b = b0.normalized();
  const bool la = std::abs(a.A) <= tol, lb = std::abs(b.A) <= tol;
  if (la && lb) {
    // 2 Re(conj(B) z) = -C for both lines.
    const double a11 = a.B.real(), a12 = a.B.imag(), a21 = b.B.real(), a22 = b.B.imag();
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) <= tol) return {};
    const double r1 = -a.C / 2.0, r2 = -b.C / 2.0;
    return {Complex((r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det)};
  }
  if (la) return line_meets({0.0, a.B, a.C}, b, tol);
  if (lb) return line_meets({0.0, b.B, b.C}, a, tol);
  const GenCircle radical{0.0, a.B / a.A - b.B / b.A, a.C / a.A - b.C / b.A};
  if (std::abs(radical.B) <= tol * (std::abs(a.B / a.A) + std::abs(b.B / b.A) + 1.0)) return {};
  return line_meets(radical, a, tol);
}

MoebiusLike MoebiusLike::reflection(const GenCircle& c) {
  const GenCircle n = c.normalized();
  MoebiusLike r;
  r.m << n.B, n.C, -n.A, -std::conj(n.B);
  r.conjugating = true;
  return r.normalized();
}

MoebiusLike MoebiusLike::normalized() const {
  const Complex det = m.determinant();
  if (std::abs(det) == 0.0) throw Error(ErrorKind::InvalidInput, "singular Moebius matrix");
  MoebiusLike out = *this;
  out.m /= std::sqrt(det);
  return out;
}

MoebiusLike MoebiusLike::after(const MoebiusLike& g) const {
  MoebiusLike out;
  out.m = m * (conjugating ? Matrix2c(g.m.conjugate()) : g.m);
  out.conjugating = conjugating != g.conjugating;
  return out;
}

ExtPoint MoebiusLike::apply(const ExtPoint& p) const {
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double scale = m.norm();
  if (p.infinite) {
    if (std::abs(c) <= 1e-15 * scale) return ExtPoint::infinity();
    return {a / c, false};
  }
  const Complex w = conjugating ? std::conj(p.z) : p.z;
  const Complex num = a * w + b, den = c * w + d;
  if (std::abs(den) <= 1e-15 * scale * (1.0 + std::abs(w))) return ExtPoint::infinity();
  return {num / den, false};
}

Complex MoebiusLike::apply(Complex z) const {
  ExtPoint r = apply(ExtPoint{z, false});
  if (r.infinite) throw Error(ErrorKind::PoleOfInversion, "point maps to infinity");
  return r.z;
}

GenCircle MoebiusLike::image(const GenCircle& c) const {
  if (conjugating) throw Error(ErrorKind::InvalidInput, "circle image needs a holomorphic map");
  const Matrix2c inv = m.inverse();
  Matrix2c h = inv.adjoint() * c.hermitian() * inv;
  return GenCircle::from_hermitian(h).normalized();
}

double projective_distance(const MoebiusLike& f, const MoebiusLike& g) {
  if (f.conjugating != g.conjugating) return 2.0;
  const double ip = std::abs((f.m.conjugate().cwiseProduct(g.m)).sum()) / (f.m.norm() * g.m.norm());
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * ip));
}

void PolygonSpec::validate() const {
  if (sides.size() < 2) throw Error(ErrorKind::InvalidInput, "polygon needs at least two sides");
  for (size_t i = 0; i < sides.size(); ++i) {
    const auto& s = sides[i];
    for (Complex e : {s.from, s.to})
      if (!s.circle.contains(ExtPoint{e, false}, kEndpointTol))
        throw Error(ErrorKind::InvalidInput, "endpoint " + format_complex(e) + " of side " + std::to_string(i) +
                                                 " is not on its circle");
    const auto& next = sides[(i + 1) % sides.size()];
    if (!near(s.to, next.from, kEndpointTol))
      throw Error(ErrorKind::InvalidInput, "side " + std::to_string(i) + " does not end where the next side starts");
  }
}

PolygonSpec PolygonSpec::transformed(const MoebiusLike& t) const {
  PolygonSpec out;
  for (const auto& s : sides) out.sides.push_back({t.image(s.circle), t.apply(s.from), t.apply(s.to)});
  return out;
}

namespace {

/// Distinct side circles, normalised.
std::vector<GenCircle> distinct_circles(const PolygonSpec& poly) {
  std::vector<GenCircle> out;
  for (const auto& s : poly.sides) {
    const GenCircle n = s.circle.normalized();
    const bool dup = std::any_of(out.begin(), out.end(), [&](const GenCircle& c) {
      return projective_distance(MoebiusLike::reflection(c), MoebiusLike::reflection(n)) <= 1e-9;
    });
    if (!dup) out.push_back(n);
  }
  return out;
}

}  // namespace

std::optional<ExtPoint> common_point_of_sides(const PolygonSpec& poly, double tol) {
  const auto circles = distinct_circles(poly);
  if (circles.size() < 2) return std::nullopt;
  std::vector<ExtPoint> candidates;
  for (Complex z : intersect(circles[0], circles[1], tol)) candidates.push_back({z, false});
  if (circles[0].contains(ExtPoint::infinity(), tol) && circles[1].contains(ExtPoint::infinity(), tol))
    candidates.push_back(ExtPoint::infinity());
  for (const auto& p : candidates)
    if (std::all_of(circles.begin(), circles.end(), [&](const GenCircle& c) { return c.contains(p, 100.0 * tol); }))
      return p;
  return std::nullopt;
}

std::optional<SymmetricPair> symmetric_pair(const PolygonSpec& poly, double tol) {
  const auto circles = distinct_circles(poly);
  for (size_t i = 0; i < circles.size(); ++i)
    for (size_t j = i + 1; j < circles.size(); ++j) {
      MoebiusLike g = MoebiusLike::reflection(circles[j]).after(MoebiusLike::reflection(circles[i])).normalized();
      const Complex a = g.m(0, 0), b = g.m(0, 1), c = g.m(1, 0), d = g.m(1, 1);
      const Complex tr = a + d;
      if (std::abs(tr * tr - 4.0) <= 1e3 * tol) continue;  // parabolic or identity
      std::vector<ExtPoint> fixed;
      if (std::abs(c) <= 1e-12 * g.m.norm()) {
        fixed.push_back(ExtPoint::infinity());
        fixed.push_back({b / (d - a), false});
      } else {
        const Complex s = std::sqrt((d - a) * (d - a) + 4.0 * b * c);
        fixed.push_back({(a - d + s) / (2.0 * c), false});
        fixed.push_back({(a - d - s) / (2.0 * c), false});
      }
      const ExtPoint& p = fixed[0];
      const ExtPoint& q = fixed[1];
      const bool ok = std::all_of(circles.begin(), circles.end(), [&](const GenCircle& k) {
        if (k.contains(p, 100.0 * tol) && k.contains(q, 100.0 * tol)) return true;
        return chordal_distance(reflect(k, p), q) <= 100.0 * tol;
      });
      if (!ok) continue;
      SymmetricPair out{p, q, static_cast<int>(i), static_cast<int>(j)};
      if (out.p.infinite) std::swap(out.p, out.q);
      return out;
    }
  return std::nullopt;
}

ClosureResult reflection_group_closure(const PolygonSpec& poly, int bound, double tol) {
  std::vector<MoebiusLike> gens;
  for (const auto& c : distinct_circles(poly)) gens.push_back(MoebiusLike::reflection(c));
  const double dedup = 100.0 * tol;
  std::vector<MoebiusLike> elems{MoebiusLike{}};
  std::deque<size_t> queue{0};
  ClosureResult res;
  while (!queue.empty()) {
    const MoebiusLike e = elems[queue.front()];
    queue.pop_front();
    for (const auto& g : gens) {
      MoebiusLike h = g.after(e).normalized();
      const bool seen =
          std::any_of(elems.begin(), elems.end(), [&](const MoebiusLike& x) { return projective_distance(x, h) <= dedup; });
      if (seen) continue;
      elems.push_back(h);
      if (static_cast<int>(elems.size()) > bound) return res;
      queue.push_back(elems.size() - 1);
    }
  }
  res.finite = true;
  res.order = static_cast<int>(elems.size());
  std::vector<MoebiusLike> rotations;
  for (const auto& e : elems)
    if (!e.conjugating) rotations.push_back(e);
  res.rotation_order = static_cast<int>(rotations.size());
  res.net = net_name(rotations, dedup);
  return res;
}

PolygonClassification classify_polygon(const PolygonSpec& poly, double tol) {
  poly.validate();
  PolygonClassification out;
  out.common_point = common_point_of_sides(poly, tol);
  out.pair = symmetric_pair(poly, tol);
  out.closure = reflection_group_closure(poly, 400, tol);

  std::vector<int> hits;
  if (out.common_point) hits.push_back(1);
  if (out.pair) hits.push_back(2);
  if (out.closure.finite) hits.push_back(3);
  out.case_number = hits.empty() ? 0 : hits.front();
  if (hits.size() > 1) out.also_holds.assign(hits.begin() + 1, hits.end());

  std::map<std::string, std::string> fields{{"case", std::to_string(out.case_number)},
                                            {"closure", out.closure.finite ? std::to_string(out.closure.order) : "exceeds 400"}};
  auto add = [&](VerdictClass cls, int k, VerdictStatus st, const std::string& reason) {
    out.verdicts.push_back({cls, k, st, reason, fields});
  };
  switch (out.case_number) {
    case 1: {
      out.tag = "ChristoffelSchwarz";
      fields["common_point"] = out.common_point->to_string();
      const std::string r = "continuations of all sides pass through " + out.common_point->to_string() +
                            "; the map is a Christoffel-Schwarz integral, integrable by quadratures";
      add(VerdictClass::Quadratures, 0, VerdictStatus::Representable, r);
      add(VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::Representable, r);
      break;
    }
    case 2: {
      out.tag = "SymmetricPair";
      fields["pair"] = out.pair->p.to_string() + "," + out.pair->q.to_string();
      const std::string r = "points " + out.pair->p.to_string() + " and " + out.pair->q.to_string() +
                            " are symmetric with respect to every side; sending them to 0 and inf gives arcs "
                            "centred at 0 and straight rays, integrable by quadratures";
      add(VerdictClass::Quadratures, 0, VerdictStatus::Representable, r);
      add(VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::Representable, r);
      break;
    }
    case 3: {
      out.tag = "FiniteNet:" + out.closure.net;
      fields["net"] = out.closure.net;
      fields["rotation_order"] = std::to_string(out.closure.rotation_order);
      const bool ico = out.closure.net == "icosahedral";
      const std::string r = "sides lie in a finite " + out.closure.net + " net; reflection group of order " +
                            std::to_string(out.closure.order) + ", rotation subgroup of order " +
                            std::to_string(out.closure.rotation_order);
      add(ico ? VerdictClass::KRadicals : VerdictClass::Radicals, ico ? 5 : 0, VerdictStatus::Representable, r);
      add(VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::Representable, r);
      break;
    }
    default:
      out.tag = "None";
      add(VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::StronglyNonRepresentable,
          "no common point, no symmetric pair, and the reflection group exceeds 400 elements");
  }
  return out;
}

}  // namespace monokit
