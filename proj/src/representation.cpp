#include "teich/representation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace teich {

MoebiusMap evaluate_base(const Representation& rho, const Word& w) {
  MoebiusMap m = MoebiusMap::identity();
  for (int8_t l : w.letters) {
    const int g = letter_gen(l);
    if (g >= rho.rank())
      throw std::invalid_argument("evaluate: unknown generator '" +
                                  std::string(1, static_cast<char>('a' + g)) + "'");
    m = m * (letter_inv(l) ? rho.baseImages[g].inverse() : rho.baseImages[g]);
  }
  return m;
}

MoebiusMap evaluate(const Representation& rho, const Word& w) {
  return evaluate_base(rho, rho.marking.apply(w));
}

MoebiusMap generator_image(const Representation& rho, int gen) {
  Word w;
  w.letters.push_back(static_cast<int8_t>(make_letter(gen, false)));
  return evaluate(rho, w);
}

Representation precompose(const Representation& rho, const FreeAutomorphism& phi) {
  Representation r = rho;
  r.marking = compose(rho.marking, phi);
  return r;
}

FrickeTriple fricke_triple(double x, double y, char branch) {
  if (!(x > 2.0) || !(y > 2.0))
    throw std::invalid_argument("fricke: traces must satisfy x > 2, y > 2");
  if (branch != '-' && branch != '+')
    throw std::invalid_argument("fricke: branch must be '+' or '-'");
  const double disc = x * x * y * y - 4.0 * (x * x + y * y);
  if (disc < 0.0) throw std::domain_error("no real Fricke solution");
  const double s = std::sqrt(disc);
  return {x, y, branch == '-' ? (x * y - s) / 2.0 : (x * y + s) / 2.0};
}

namespace {

Representation torus_rep_from_xyz(double x, double y, double z) {
  // A = diag(lam, 1/lam), lam + 1/lam = x; B = (s t; 1 v) with
  // s + v = y, lam s + v/lam = z, det 1 via t = s v - 1.
  const double lam = (x + std::sqrt((x - 2.0) * (x + 2.0))) / 2.0;
  const double s = (lam * z - y) / (lam * lam - 1.0);
  const double v = y - s;
  const double t = s * v - 1.0;

  Representation rho;
  rho.genus = 1;
  rho.punctures = 1;
  rho.baseImages = {MoebiusMap{lam, 0.0, 0.0, 1.0 / lam},
                    MoebiusMap{s, t, 1.0, v}};
  rho.marking = identity_automorphism(2);
  rho.peripheralWords = {peripheral_torus_word()};
  return rho;
}

}  // namespace

Representation punctured_torus_from_traces(double x, double y, char branch) {
  const FrickeTriple f = fricke_triple(x, y, branch);
  return torus_rep_from_xyz(f.x, f.y, f.z);
}

Representation pinching_family(double eps, const Rational& slope) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("pinching_family: need 0 < eps < 1");
  const double C = std::cosh(eps / 2.0);
  const double S = std::sinh(eps / 2.0);
  const double lam = std::exp(eps / 2.0);

  Representation rho;
  rho.genus = 1;
  rho.punctures = 1;
  rho.baseImages = {MoebiusMap{lam, 0.0, 0.0, std::exp(-eps / 2.0)},
                    MoebiusMap{C / (2.0 * S), 1.0 / (S * S), 1.0, 2.0 * C / S}};
  rho.peripheralWords = {peripheral_torus_word()};
  rho.marking = identity_automorphism(2);
  if (!(slope.p == 0 && std::abs(slope.q) == 1))
    rho.marking = slope_automorphism(slope).inverted();
  return rho;
}

bool ValidationReport::detOk() const {
  for (double r : detResiduals)
    if (!(r <= detTol)) return false;
  return true;
}

bool ValidationReport::peripheralsOk() const {
  for (double r : peripheralResiduals)
    if (!(r <= peripheralTol)) return false;
  return true;
}

bool ValidationReport::jorgensenFlagged() const {
  for (double v : jorgensenValues)
    if (v < 1.0) return true;
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (pass() ? "ok" : "FAIL");
  os << " det[";
  for (size_t i = 0; i < detResiduals.size(); ++i)
    os << (i ? "," : "") << detResiduals[i];
  os << "] peripheral[";
  for (size_t i = 0; i < peripheralResiduals.size(); ++i)
    os << (i ? "," : "") << peripheralResiduals[i];
  os << "] jorgensen[";
  for (size_t i = 0; i < jorgensenValues.size(); ++i)
    os << (i ? "," : "") << jorgensenValues[i] << (jorgensenValues[i] < 1.0 ? "!" : "");
  os << "]";
  if (relatorResidual >= 0.0) os << " relator " << relatorResidual;
  return os.str();
}

ValidationReport validate(const Representation& rho) {
  ValidationReport rep;
  for (int g = 0; g < rho.rank(); ++g)
    rep.detResiduals.push_back(std::fabs(generator_image(rho, g).det() - 1.0));
  for (const Word& w : rho.peripheralWords) {
    const double tr = evaluate(rho, w).trace();
    rep.peripheralResiduals.push_back(std::fabs(std::fabs(tr) - 2.0));
  }
  for (int i = 0; i < rho.rank(); ++i) {
    for (int j = i + 1; j < rho.rank(); ++j) {
      const MoebiusMap A = generator_image(rho, i);
      const MoebiusMap B = generator_image(rho, j);
      const MoebiusMap comm = A * B * A.inverse() * B.inverse();
      const double trA = A.trace();
      rep.jorgensenPairs.emplace_back(i, j);
      rep.jorgensenValues.push_back(std::fabs(trA * trA - 4.0) +
                                    std::fabs(comm.trace() - 2.0));
    }
  }
  if (rho.genus >= 2 && rho.punctures == 0 && rho.rank() == 2 * rho.genus) {
    MoebiusMap r = MoebiusMap::identity();
    for (int i = 0; i < rho.genus; ++i) {
      const MoebiusMap A = generator_image(rho, 2 * i);
      const MoebiusMap B = generator_image(rho, 2 * i + 1);
      r = r * (A * B * A.inverse() * B.inverse());
    }
    const MoebiusMap c = r.canonical();
    rep.relatorResidual =
        std::max(std::max(std::fabs(c.a - 1.0), std::fabs(c.b)),
                 std::max(std::fabs(c.c), std::fabs(c.d - 1.0)));
  }
  return rep;
}

std::string rep_to_json(const Representation& rho) {
  nlohmann::json j;
  j["surface"]["genus"] = rho.genus;
  j["surface"]["punctures"] = rho.punctures;
  for (int g = 0; g < rho.rank(); ++g) {
    const MoebiusMap m = generator_image(rho, g);
    j["generators"][std::string(1, static_cast<char>('a' + g))] = {m.a, m.b, m.c, m.d};
  }
  j["peripherals"] = nlohmann::json::array();
  for (const Word& w : rho.peripheralWords) j["peripherals"].push_back(word_string(w));
  return j.dump(2);
}

Representation rep_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("rep_from_json: ") + e.what());
  }
  Representation rho;
  rho.genus = j.at("surface").at("genus").get<int>();
  rho.punctures = j.at("surface").at("punctures").get<int>();
  const auto& gens = j.at("generators");
  rho.baseImages.resize(gens.size());
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    const std::string name = it.key();
    if (name.size() != 1 || name[0] < 'a' || name[0] >= 'a' + static_cast<char>(gens.size()))
      throw std::invalid_argument("rep_from_json: generator names must be a, b, ...");
    const auto arr = it.value().get<std::vector<double>>();
    if (arr.size() != 4)
      throw std::invalid_argument("rep_from_json: matrix must have 4 entries");
    rho.baseImages[name[0] - 'a'] = MoebiusMap{arr[0], arr[1], arr[2], arr[3]};
  }
  rho.marking = identity_automorphism(rho.rank());
  if (j.contains("peripherals"))
    for (const auto& s : j.at("peripherals"))
      rho.peripheralWords.push_back(parse_word(s.get<std::string>()));
  return rho;
}

Representation rep_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open representation file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return rep_from_json(ss.str());
}

}  // namespace teich
