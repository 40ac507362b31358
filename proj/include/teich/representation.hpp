#pragma once

#include <string>
#include <vector>

#include "teich/moebius.hpp"
#include "teich/words.hpp"

// Holonomy representations pi_1 S -> PSL2(R) with explicit SL2 lifts,
// Fricke-coordinate constructors and pinching families on the
// once-punctured torus.

namespace teich {

// A representation is stored as base generator lifts together with a word
// marking psi: the represented map is w -> base(psi(w)). Plain
// representations have the identity marking. Pinching families transported
// to a nonzero slope keep the well-conditioned base matrices and put the
// slope change into psi, so that class-indexed lengths can be evaluated on
// cyclically reduced words (the transported generator products cancel
// catastrophically in floating point for strongly pinched families).
struct Representation {
  int genus = 1;
  int punctures = 1;
  std::vector<MoebiusMap> baseImages;  // generator g -> SL2 lift
  FreeAutomorphism marking;            // psi
  std::vector<Word> peripheralWords;

  int rank() const { return static_cast<int>(baseImages.size()); }
};

// Product of base generator lifts, no marking applied.
MoebiusMap evaluate_base(const Representation& rho, const Word& w);

// rho(w) = base(psi(w)).
MoebiusMap evaluate(const Representation& rho, const Word& w);

MoebiusMap generator_image(const Representation& rho, int gen);

// rho o phi.
Representation precompose(const Representation& rho, const FreeAutomorphism& phi);

struct FrickeTriple {
  double x, y, z;  // traces of A, B, AB
  double identity_residual() const { return x * x + y * y + z * z - x * y * z; }
};

// Punctured-torus representation from traces x = tr A, y = tr B with
// z = (xy -+ sqrt(x^2 y^2 - 4x^2 - 4y^2))/2. A is diagonal and B has
// lower-left entry 1, which pins the conjugation gauge. Requires x > 2,
// y > 2; throws "no real Fricke solution" when the discriminant is
// negative.
Representation punctured_torus_from_traces(double x, double y, char branch = '-');

FrickeTriple fricke_triple(double x, double y, char branch = '-');

// Family in which the slope-(p/q) simple closed curve has translation
// length exactly eps. Built at slope 0 with x = 2 cosh(eps/2) and
// y = 1.25 * 2x/sqrt(x^2-4), then transported through the mapping class
// carrying slope 0 to slope p/q. With this margin the matrices close up:
//   A = diag(e^{eps/2}, e^{-eps/2}),
//   B = ( coth(eps/2)/2   1/sinh^2(eps/2) ; 1   2 coth(eps/2) ).
Representation pinching_family(double eps, const Rational& slope);

struct ValidationReport {
  std::vector<double> detResiduals;         // |det - 1| per generator
  std::vector<double> peripheralResiduals;  // ||tr| - 2| per peripheral word
  std::vector<std::pair<int, int>> jorgensenPairs;
  std::vector<double> jorgensenValues;  // |tr^2 A - 4| + |tr [A,B] - 2|
  double relatorResidual = -1.0;        // closed surface only, else -1

  double detTol = 1e-10;
  double peripheralTol = 1e-6;

  bool detOk() const;
  bool peripheralsOk() const;
  bool jorgensenFlagged() const;  // any value < 1: discreteness suspect
  bool pass() const { return detOk() && peripheralsOk(); }
  std::string summary() const;
};

ValidationReport validate(const Representation& rho);

// JSON schema: {"surface": {"genus", "punctures"},
//               "generators": {"a": [a,b,c,d], ...},
//               "peripherals": ["abAB", ...]}
// Serialization composes the marking into the generator matrices.
std::string rep_to_json(const Representation& rho);
Representation rep_from_json(const std::string& text);
Representation rep_from_json_file(const std::string& path);

}  // namespace teich
