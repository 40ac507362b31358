#include "teich/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teich {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIdentityBand = 1e-12;
}  // namespace

MoebiusMap MoebiusMap::normalized() const {
  const double dt = det();
  if (!(dt > 0.0)) throw std::invalid_argument("MoebiusMap: determinant must be positive");
  const double s = 1.0 / std::sqrt(dt);
  return {a * s, b * s, c * s, d * s};
}

MoebiusMap MoebiusMap::canonical() const {
  MoebiusMap m = normalized();
  const double tr = m.trace();
  if (tr < -kIdentityBand) return {-m.a, -m.b, -m.c, -m.d};
  if (tr <= kIdentityBand) {
    // traceless: make the first entry of largest magnitude positive
    const double v[4] = {m.a, m.b, m.c, m.d};
    int k = 0;
    for (int i = 1; i < 4; ++i)
      if (std::fabs(v[i]) > std::fabs(v[k])) k = i;
    if (v[k] < 0.0) return {-m.a, -m.b, -m.c, -m.d};
  }
  return m;
}

MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

bool psl2_equal(const MoebiusMap& m, const MoebiusMap& n, double tol) {
  const MoebiusMap cm = m.canonical(), cn = n.canonical();
  return std::fabs(cm.a - cn.a) <= tol && std::fabs(cm.b - cn.b) <= tol &&
         std::fabs(cm.c - cn.c) <= tol && std::fabs(cm.d - cn.d) <= tol;
}

HPoint apply(const MoebiusMap& m, const HPoint& p) {
  const std::complex<double> z = p.z();
  const std::complex<double> w = (m.a * z + m.b) / (m.c * z + m.d);
  return {w.real(), w.imag()};
}

double dist(const HPoint& p, const HPoint& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  const double r = std::hypot(dx, dy) / (2.0 * std::sqrt(p.y * q.y));
  return 2.0 * std::asinh(r);
}

double translation_length_from_trace(double t) {
  const double u = std::fabs(t);
  if (u <= 2.0) return 0.0;
  // cosh(l/2) = u/2  =>  sinh(l/2) = sqrt((u-2)(u+2))/2
  return 2.0 * std::asinh(0.5 * std::sqrt((u - 2.0) * (u + 2.0)));
}

IsometryKind classify(const MoebiusMap& m0) {
  const MoebiusMap m = m0.normalized();
  IsometryKind k;
  const double tr = m.trace();
  const double atr = std::fabs(tr);

  const bool isId = std::fabs(std::fabs(m.a) - 1.0) <= kIdentityBand &&
                    std::fabs(m.b) <= kIdentityBand &&
                    std::fabs(m.c) <= kIdentityBand &&
                    std::fabs(std::fabs(m.d) - 1.0) <= kIdentityBand && atr > 1.0;
  if (isId) {
    k.tag = IsometryTag::Identity;
    return k;
  }

  if (std::fabs(atr - 2.0) <= kParabolicTraceBand) {
    k.tag = IsometryTag::Parabolic;
    return k;
  }

  if (atr < 2.0) {
    k.tag = IsometryTag::Elliptic;
    // fixed point of cz^2 + (d-a)z - b = 0 in the upper half-plane;
    // elliptic forces c != 0
    const double im = std::sqrt((2.0 - atr) * (2.0 + atr));  // sqrt(4 - tr^2)
    const double re = (m.a - m.d);
    const double sgn = m.c > 0.0 ? 1.0 : -1.0;
    k.fixedInterior = HPoint(re / (2.0 * m.c), sgn * im / (2.0 * m.c));
    return k;
  }

  k.tag = IsometryTag::Hyperbolic;
  k.translationLength = translation_length_from_trace(tr);
  // work with the trace >= 0 lift, whose eigenvalue lam > 1 marks the
  // attracting fixed point
  const MoebiusMap n = tr < 0.0 ? MoebiusMap{-m.a, -m.b, -m.c, -m.d} : m;
  const double t = n.trace();
  const double disc = std::sqrt((t - 2.0) * (t + 2.0));
  const double lam = (t + disc) / 2.0;
  const double mu = (t - disc) / 2.0;
  if (std::fabs(n.c) > 1e-300) {
    k.fixedAttracting = (lam - n.d) / n.c;
    k.fixedRepelling = (mu - n.d) / n.c;
  } else {
    // one fixed point at infinity
    if (std::fabs(n.a) > std::fabs(n.d)) {
      k.fixedAttracting = kInf;
      k.fixedRepelling = n.b / (n.d - n.a);
    } else {
      k.fixedRepelling = kInf;
      k.fixedAttracting = n.b / (n.d - n.a);
    }
  }
  return k;
}

double trace_product_identity_gap(const MoebiusMap& A, const MoebiusMap& B) {
  const MoebiusMap AB = A * B;
  const MoebiusMap AiB = A.inverse() * B;
  return AB.trace() + AiB.trace() - A.trace() * B.trace();
}

MoebiusMap boundary_normalizer(double u, double v) {
  if (std::isinf(v)) {
    // z -> z - u
    return MoebiusMap{1, -u, 0, 1};
  }
  if (std::isinf(u)) {
    // z -> -1/(z - v)
    return MoebiusMap{0, -1, 1, -v};
  }
  if (u == v) throw std::invalid_argument("boundary_normalizer: endpoints coincide");
  // z -> +/- (z-u)/(z-v), sign fixed so det > 0
  MoebiusMap g{1, -u, 1, -v};
  if (g.det() < 0.0) g = MoebiusMap{-1, u, 1, -v};
  return g.normalized();
}

HPoint axis_point(const MoebiusMap& m, double t) {
  const IsometryKind k = classify(m);
  if (k.tag != IsometryTag::Hyperbolic)
    throw std::invalid_argument("axis_point: map is not hyperbolic");
  const MoebiusMap g = boundary_normalizer(k.fixedRepelling, k.fixedAttracting);
  const HPoint w = apply(g, HPoint{0.0, 1.0});
  const double s0 = std::hypot(w.x, w.y);  // foot of the perpendicular from i
  return apply(g.inverse(), HPoint{0.0, s0 * std::exp(t)});
}

GeodesicEnds geodesic_through(const HPoint& p, const HPoint& q) {
  GeodesicEnds e;
  if (std::fabs(p.x - q.x) <= 1e-14 * (1.0 + std::fabs(p.x))) {
    e.e1 = p.x;
    e.e2 = kInf;
    return e;
  }
  // center of the semicircle orthogonal to the real axis through p, q
  const double c = (p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y) /
                   (2.0 * (p.x - q.x));
  const double rho = std::hypot(p.x - c, p.y);
  e.e1 = c - rho;
  e.e2 = c + rho;
  return e;
}

double dist_to_segment(const HPoint& p, const HPoint& q, const HPoint& z) {
  const double dpq = dist(p, q);
  if (dpq <= 1e-15) return dist(p, z);
  const GeodesicEnds e = geodesic_through(p, q);
  const MoebiusMap g = boundary_normalizer(e.e1, e.e2);
  // the geodesic becomes the vertical axis; feet project to height |w|
  const HPoint wp = apply(g, p), wq = apply(g, q), wz = apply(g, z);
  double h1 = std::hypot(wp.x, wp.y);
  double h2 = std::hypot(wq.x, wq.y);
  if (h1 > h2) std::swap(h1, h2);
  const double hz = std::clamp(std::hypot(wz.x, wz.y), h1, h2);
  return dist(wz, HPoint{0.0, hz});
}

namespace {

// endpoints as a sortable pair with infinity handled by inversion z -> -1/z
struct AxisEnds {
  double r, a;  // repelling, attracting
};

AxisEnds axis_ends(const MoebiusMap& m) {
  const IsometryKind k = classify(m);
  if (k.tag != IsometryTag::Hyperbolic)
    throw std::invalid_argument("axes helper: map is not hyperbolic");
  return {k.fixedRepelling, k.fixedAttracting};
}

bool in_open_interval(double x, double lo, double hi) { return lo < x && x < hi; }

}  // namespace

bool axes_cross(const MoebiusMap& m1, const MoebiusMap& m2) {
  AxisEnds e1 = axis_ends(m1), e2 = axis_ends(m2);
  // move e1 to (0, inf) and count e2 endpoints inside (0, inf) = upper ray
  const MoebiusMap g = boundary_normalizer(e1.r, e1.a);
  auto img = [&](double x) -> double {
    if (std::isinf(x)) {
      if (std::fabs(g.c) < 1e-300) return kInf;
      return g.a / g.c;
    }
    const double den = g.c * x + g.d;
    if (std::fabs(den) < 1e-300) return kInf;
    return (g.a * x + g.b) / den;
  };
  const double u = img(e2.r), v = img(e2.a);
  if (std::isinf(u) || std::isinf(v)) return false;        // shares endpoint inf
  if (std::fabs(u) < 1e-300 || std::fabs(v) < 1e-300) return false;
  // axis1 is now the vertical line over 0; crossing iff u, v straddle it
  return (u < 0.0) != (v < 0.0);
}

double axes_distance(const MoebiusMap& m1, const MoebiusMap& m2) {
  AxisEnds e1 = axis_ends(m1), e2 = axis_ends(m2);
  const MoebiusMap g = boundary_normalizer(e1.r, e1.a);
  auto img = [&](double x) -> double {
    if (std::isinf(x)) {
      if (std::fabs(g.c) < 1e-300) return kInf;
      return g.a / g.c;
    }
    const double den = g.c * x + g.d;
    if (std::fabs(den) < 1e-300) return kInf;
    return (g.a * x + g.b) / den;
  };
  const double u = img(e2.r), v = img(e2.a);
  if (std::isinf(u) || std::isinf(v))
    throw std::domain_error("axes_distance: axes share an endpoint at infinity");
  const double c = 0.5 * (u + v);
  const double rho = 0.5 * std::fabs(v - u);
  if (rho < 1e-300)
    throw std::domain_error("axes_distance: degenerate second axis");
  if (in_open_interval(0.0, std::min(u, v), std::max(u, v))) return 0.0;  // crossing
  const double ratio = std::fabs(c) / rho;
  if (ratio <= 1.0) return 0.0;  // tangent at the boundary
  return std::acosh(ratio);
}

double axes_crossing_angle_cos(const MoebiusMap& m1, const MoebiusMap& m2) {
  AxisEnds e1 = axis_ends(m1), e2 = axis_ends(m2);
  const MoebiusMap g = boundary_normalizer(e1.r, e1.a);
  auto img = [&](double x) -> double {
    if (std::isinf(x)) {
      if (std::fabs(g.c) < 1e-300) return kInf;
      return g.a / g.c;
    }
    const double den = g.c * x + g.d;
    if (std::fabs(den) < 1e-300) return kInf;
    return (g.a * x + g.b) / den;
  };
  const double u = img(e2.r), v = img(e2.a);
  if (!((u < 0.0) != (v < 0.0)))
    throw std::domain_error("axes_crossing_angle_cos: axes do not cross");
  // axis1 = vertical ray toward infinity (attracting direction (0,1));
  // axis2 = semicircle over [u, v]; crossing point at x = 0
  const double c = 0.5 * (u + v);
  const double rho = 0.5 * std::fabs(v - u);
  const double yc = std::sqrt(rho * rho - c * c);
  // tangent to the semicircle at (0, yc), oriented from u toward v/attracting
  // radius vector is (-c, yc); tangent = rotate by -90 deg: (yc, c), flip so it
  // points from the u-side to the v-side
  double tx = yc, ty = c;
  if (v < u) {
    tx = -tx;
    ty = -ty;
  }
  const double norm = std::hypot(tx, ty);
  // attracting direction of axis1 is straight up; the model is conformal
  return ty / norm;
}

}  // namespace teich
