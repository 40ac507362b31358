#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "teich/representation.hpp"
#include "teich/words.hpp"

// Marked length spectra, projectivization and the injectivity toolkit.

namespace teich {

struct LengthSpectrum {
  std::vector<ConjClass> classes;
  std::vector<double> values;  // parallel to classes, >= 0

  int size() const { return static_cast<int>(values.size()); }
};

// Max-normalized spectrum; max of values is exactly 1.
struct ProjectivePoint {
  LengthSpectrum normalized;
  double normalizer = 1.0;  // the max divided out
};

// 2 arcosh(|tr|/2) for hyperbolic images, 0 for parabolic ones. The trace
// is taken on the cyclically reduced representative of the marked word,
// which keeps pinched families well conditioned. Throws on elliptic
// images ("non-discrete or torsion image").
double translation_length(const Representation& rho, const ConjClass& alpha);

// Per-class translation lengths, order preserved. The parallel kernel and
// the serial reference compute identical values.
LengthSpectrum spectrum(const Representation& rho, const std::vector<ConjClass>& classes);
LengthSpectrum spectrum_serial(const Representation& rho,
                               const std::vector<ConjClass>& classes);

// Divide by the max. Throws on an all-zero or empty spectrum.
ProjectivePoint projectivize(const LengthSpectrum& s);

// Sup-norm distance of normalized vectors over the same class set.
double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q);

// (l(a), l(b), l(ab)) for punctured-torus representations.
std::array<double, 3> fricke_embedding(const Representation& rho);

// Both rigidity equations within tol:
//   cosh u + cosh v = cosh w + cosh x
//   cosh tu + cosh tv = cosh tw + cosh tx
bool lemma7_check(double u, double v, double w, double x, double t, double tol = 1e-9);

// Companion solver: given (u, v, t) and w, solve each equation for x.
struct CoshRigiditySolve {
  bool solvable1 = false, solvable2 = false;
  double x1 = 0.0, x2 = 0.0;  // from the first and second equation
  bool consistent(double tol = 1e-6) const {
    return solvable1 && solvable2 && std::fabs(x1 - x2) <= tol;
  }
};
CoshRigiditySolve lemma7_solve(double u, double v, double t, double w);

// Projective sup-distance of the two spectra over the non-peripheral
// classes of canonical length <= maxLen; positive for distinct marked
// structures.
double injectivity_probe(const Representation& r1, const Representation& r2, int maxLen);

}  // namespace teich
