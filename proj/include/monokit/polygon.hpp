#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "monokit/numeric.hpp"
#include "monokit/verdict.hpp"

namespace monokit {

using Matrix2c = Eigen::Matrix2cd;

/// Point of the Riemann sphere.
struct ExtPoint {
  Complex z{0.0, 0.0};
  bool infinite = false;

  static ExtPoint infinity() { return {Complex(0.0, 0.0), true}; }
  std::string to_string() const;
};

/// Chordal distance on the Riemann sphere.
double chordal_distance(const ExtPoint& p, const ExtPoint& q);

/// The locus A|z|^2 + 2 Re(conj(B) z) + C = 0; a line when A = 0.
struct GenCircle {
  double A = 0.0;
  Complex B{0.0, 0.0};
  double C = 0.0;

  static GenCircle circle(Complex center, double radius);
  static GenCircle line(Complex p1, Complex p2);

  /// Scaled so that |B|^2 - AC = 1. Throws InvalidInput for degenerate loci.
  GenCircle normalized() const;
  bool is_line(double tol = 1e-12) const;
  Complex center() const;
  double radius() const;
  double eval(Complex z) const;
  bool contains(const ExtPoint& p, double tol) const;
  /// Hermitian matrix [[A, B], [conj(B), C]].
  Matrix2c hermitian() const;
  static GenCircle from_hermitian(const Matrix2c& h);
};

/// Inversion in a circle or mirror reflection in a line. Throws PoleOfInversion at the centre.
Complex reflect(const GenCircle& c, Complex z);
ExtPoint reflect(const GenCircle& c, const ExtPoint& p);

/// Finite intersection points (0, 1 or 2).
std::vector<Complex> intersect(const GenCircle& a, const GenCircle& b, double tol);

/// z -> (a w + b) / (c w + d) with w = z, or w = conj(z) when `conjugating`.
struct MoebiusLike {
  Matrix2c m = Matrix2c::Identity();
  bool conjugating = false;

  static MoebiusLike reflection(const GenCircle& c);
  /// Scaled to determinant 1.
  MoebiusLike normalized() const;
  /// (*this) o g.
  MoebiusLike after(const MoebiusLike& g) const;
  ExtPoint apply(const ExtPoint& p) const;
  Complex apply(Complex z) const;
  /// Image of a circle under a holomorphic map.
  GenCircle image(const GenCircle& c) const;
};

/// Distance between two maps up to the scalar ambiguity of their matrices.
double projective_distance(const MoebiusLike& f, const MoebiusLike& g);

struct PolygonSide {
  GenCircle circle;
  Complex from;
  Complex to;
};

struct PolygonSpec {
  std::vector<PolygonSide> sides;
  /// Throws InvalidInput unless there are >= 2 sides, endpoints lie on their
  /// circles and consecutive sides share endpoints (both to 1e-9 relative).
  void validate() const;
  PolygonSpec transformed(const MoebiusLike& holomorphic) const;
};

std::optional<ExtPoint> common_point_of_sides(const PolygonSpec& poly, double tol);

struct SymmetricPair {
  ExtPoint p, q;
  /// Indices of the two sides whose reflections produced the candidate.
  int side_a = 0, side_b = 0;
};
/// Pair symmetric with respect to every side (or lying on it). Candidates are
/// the fixed points of compositions of reflections in two sides.
std::optional<SymmetricPair> symmetric_pair(const PolygonSpec& poly, double tol);

struct ClosureResult {
  bool finite = false;
  int order = 0;
  int rotation_order = 0;
  /// pyramid, diheron, tetrahedral, octahedral, icosahedral (empty when not finite).
  std::string net;
};
ClosureResult reflection_group_closure(const PolygonSpec& poly, int bound = 400, double tol = 1e-9);

struct PolygonClassification {
  /// 1 common point, 2 symmetric pair, 3 finite net, 0 none.
  int case_number = 0;
  std::string tag;
  std::optional<ExtPoint> common_point;
  std::optional<SymmetricPair> pair;
  ClosureResult closure;
  /// Cases that hold besides the reported one.
  std::vector<int> also_holds;
  std::vector<Verdict> verdicts;
};

PolygonClassification classify_polygon(const PolygonSpec& poly, double tol = 1e-9);

}  // namespace monokit
