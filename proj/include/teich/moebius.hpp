#pragma once

#include <complex>
#include <stdexcept>
#include <string>

// Exact-formula layer for the upper half-plane and PSL2(R) acting by
// homographies. Matrices are kept as explicit SL2(R) lifts; PSL2 values
// are obtained through canonical() (trace >= 0 sign convention).

namespace teich {

struct HPoint {
  double x = 0.0;
  double y = 1.0;  // strictly positive

  HPoint() = default;
  HPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0)) throw std::invalid_argument("HPoint: y must be > 0");
  }
  std::complex<double> z() const { return {x, y}; }
};

// M = +/- (a b; c d), det = 1.
struct MoebiusMap {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  MoebiusMap() = default;
  MoebiusMap(double a_, double b_, double c_, double d_)
      : a(a_), b(b_), c(c_), d(d_) {}

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }

  MoebiusMap inverse() const { return {d, -b, -c, a}; }  // adjugate; exact for det 1

  static MoebiusMap identity() { return {1, 0, 0, 1}; }

  // Rescale to det 1. Requires det > 0.
  MoebiusMap normalized() const;
  // Sign-canonical PSL2 form: trace >= 0, ties broken by the largest entry.
  MoebiusMap canonical() const;
};

MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n);

bool psl2_equal(const MoebiusMap& m, const MoebiusMap& n, double tol = 1e-9);

// Homography action z -> (az+b)/(cz+d); preserves the open half-plane.
HPoint apply(const MoebiusMap& m, const HPoint& p);

// Hyperbolic distance, cosh d = 1 + |p-q|^2 / (2 p.y q.y), computed in the
// asinh form which is exact near zero.
double dist(const HPoint& p, const HPoint& q);

enum class IsometryTag { Identity, Elliptic, Parabolic, Hyperbolic };

struct IsometryKind {
  IsometryTag tag = IsometryTag::Identity;
  // Hyperbolic data; fixed points are boundary points of R u {inf},
  // infinity() encodes the point at infinity.
  double translationLength = 0.0;
  double fixedRepelling = 0.0;
  double fixedAttracting = 0.0;
  // Elliptic data.
  HPoint fixedInterior;
};

// |tr| = 2 within this band classifies Parabolic; double-precision trace
// error for well-conditioned inputs is far below it.
inline constexpr double kParabolicTraceBand = 1e-8;

IsometryKind classify(const MoebiusMap& m);

// 2*arcosh(|t|/2) evaluated in the asinh form, stable for |t| near 2.
double translation_length_from_trace(double t);

// tr(AB) + tr(A^-1 B) - tr(A) tr(B); identically zero by Cayley-Hamilton.
double trace_product_identity_gap(const MoebiusMap& A, const MoebiusMap& B);

// Point at arc-length t along the translation axis, oriented from the
// repelling to the attracting fixed point. t = 0 is the axis point closest
// to i (for the diagonal model, i itself). Throws unless m is hyperbolic.
HPoint axis_point(const MoebiusMap& m, double t);

// --- geodesic helpers -------------------------------------------------

// Full geodesic through two distinct points, as its boundary endpoints.
struct GeodesicEnds {
  double e1 = 0.0, e2 = 0.0;  // may be infinity()
};
GeodesicEnds geodesic_through(const HPoint& p, const HPoint& q);

// Isometry sending boundary points (u, v) to (0, inf), det 1.
MoebiusMap boundary_normalizer(double u, double v);

// Distance from z to the geodesic segment [p, q].
double dist_to_segment(const HPoint& p, const HPoint& q, const HPoint& z);

// Distance between the translation axes of two hyperbolic elements.
// Returns 0 when the axes cross; throws if they share an endpoint.
double axes_distance(const MoebiusMap& m1, const MoebiusMap& m2);

bool axes_cross(const MoebiusMap& m1, const MoebiusMap& m2);

// Cosine of the angle at the crossing point between the attracting
// directions of m1 and m2. Requires crossing axes.
double axes_crossing_angle_cos(const MoebiusMap& m1, const MoebiusMap& m2);

}  // namespace teich
