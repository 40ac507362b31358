#include "teich/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace teich {

double translation_length(const Representation& rho, const ConjClass& alpha) {
  const Word marked = cyclic_reduce(rho.marking.apply(alpha.canonical));
  if (marked.empty()) return 0.0;  // trivial image
  const double tr = std::fabs(evaluate_base(rho, marked).trace());
  if (tr > 2.0 + kParabolicTraceBand) return translation_length_from_trace(tr);
  if (tr >= 2.0 - kParabolicTraceBand) return 0.0;  // parabolic (or identity)
  throw std::domain_error("non-discrete or torsion image (elliptic) for class " +
                          alpha.str());
}

namespace {

LengthSpectrum spectrum_impl(const Representation& rho,
                             const std::vector<ConjClass>& classes, bool parallel) {
  LengthSpectrum s;
  s.classes = classes;
  s.values.assign(classes.size(), 0.0);
  const int n = static_cast<int>(classes.size());
  std::string firstError;

#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < n; ++i) {
    try {
      s.values[i] = translation_length(rho, classes[i]);
    } catch (const std::exception& e) {
#pragma omp critical
      if (firstError.empty()) firstError = e.what();
    }
  }
  if (!firstError.empty()) throw std::domain_error(firstError);
  return s;
}

}  // namespace

LengthSpectrum spectrum(const Representation& rho, const std::vector<ConjClass>& classes) {
  return spectrum_impl(rho, classes, true);
}

LengthSpectrum spectrum_serial(const Representation& rho,
                               const std::vector<ConjClass>& classes) {
  return spectrum_impl(rho, classes, false);
}

ProjectivePoint projectivize(const LengthSpectrum& s) {
  double mx = 0.0;
  for (double v : s.values) mx = std::max(mx, v);
  if (!(mx > 0.0)) throw std::domain_error("projectivize: all-zero spectrum");
  ProjectivePoint p;
  p.normalizer = mx;
  p.normalized.classes = s.classes;
  p.normalized.values.reserve(s.values.size());
  for (double v : s.values) p.normalized.values.push_back(v / mx);
  return p;
}

double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.normalized.classes.size() != q.normalized.classes.size())
    throw std::invalid_argument("projective_distance: class sets differ");
  double d = 0.0;
  for (size_t i = 0; i < p.normalized.values.size(); ++i) {
    if (!(p.normalized.classes[i] == q.normalized.classes[i]))
      throw std::invalid_argument("projective_distance: class sets differ");
    d = std::max(d, std::fabs(p.normalized.values[i] - q.normalized.values[i]));
  }
  return d;
}

std::array<double, 3> fricke_embedding(const Representation& rho) {
  if (rho.rank() != 2)
    throw std::invalid_argument("fricke_embedding: punctured-torus representation required");
  return {translation_length(rho, conj_class(parse_word("a"))),
          translation_length(rho, conj_class(parse_word("b"))),
          translation_length(rho, conj_class(parse_word("ab")))};
}

bool lemma7_check(double u, double v, double w, double x, double t, double tol) {
  const double e1 = std::cosh(u) + std::cosh(v) - std::cosh(w) - std::cosh(x);
  const double e2 =
      std::cosh(t * u) + std::cosh(t * v) - std::cosh(t * w) - std::cosh(t * x);
  return std::fabs(e1) <= tol && std::fabs(e2) <= tol;
}

CoshRigiditySolve lemma7_solve(double u, double v, double t, double w) {
  CoshRigiditySolve r;
  const double c1 = std::cosh(u) + std::cosh(v) - std::cosh(w);
  if (c1 >= 1.0) {
    r.solvable1 = true;
    r.x1 = std::acosh(c1);
  }
  const double c2 = std::cosh(t * u) + std::cosh(t * v) - std::cosh(t * w);
  if (c2 >= 1.0) {
    r.solvable2 = true;
    r.x2 = std::acosh(c2) / t;
  }
  return r;
}

double injectivity_probe(const Representation& r1, const Representation& r2, int maxLen) {
  const auto classes = enumerate_classes(maxLen, /*excludePeripheral=*/true);
  return projective_distance(projectivize(spectrum(r1, classes)),
                             projectivize(spectrum(r2, classes)));
}

}  // namespace teich
