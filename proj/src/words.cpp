#include "teich/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace teich {

Word::Word(const std::vector<Letter>& raw) { *this = reduce(raw); }

bool Word::operator<(const Word& o) const {
  if (letters.size() != o.letters.size())
    return letters.size() < o.letters.size();
  return letters < o.letters;
}

Word reduce(const std::vector<Letter>& raw) {
  Word w;
  w.letters.reserve(raw.size());
  for (Letter l : raw) {
    if (!w.letters.empty() && w.letters.back() == letter_inverse(l))
      w.letters.pop_back();
    else
      w.letters.push_back(static_cast<int8_t>(l));
  }
  return w;
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> raw;
  raw.reserve(u.letters.size() + v.letters.size());
  for (int8_t l : u.letters) raw.push_back(l);
  for (int8_t l : v.letters) raw.push_back(l);
  return reduce(raw);
}

Word inverse(const Word& w) {
  Word r;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(static_cast<int8_t>(letter_inverse(*it)));
  return r;
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverse(w) : w;
  Word r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

Word parse_word(const std::string& s) {
  std::vector<Letter> raw;
  raw.reserve(s.size());
  for (char ch : s) {
    if (ch >= 'a' && ch <= 'z')
      raw.push_back(make_letter(ch - 'a', false));
    else if (ch >= 'A' && ch <= 'Z')
      raw.push_back(make_letter(ch - 'A', true));
    else if (ch == ' ')
      continue;
    else
      throw std::invalid_argument(std::string("parse_word: bad character '") + ch + "'");
  }
  return reduce(raw);
}

std::string word_string(const Word& w) {
  std::string s;
  s.reserve(w.letters.size());
  for (int8_t l : w.letters)
    s.push_back(static_cast<char>((letter_inv(l) ? 'A' : 'a') + letter_gen(l)));
  return s;
}

int max_generator_index(const Word& w) {
  int m = -1;
  for (int8_t l : w.letters) m = std::max(m, letter_gen(l));
  return m;
}

Word cyclic_reduce(const Word& w) {
  Word r = w;
  while (r.letters.size() >= 2 &&
         r.letters.front() == letter_inverse(r.letters.back())) {
    r.letters.erase(r.letters.begin());
    r.letters.pop_back();
  }
  return r;
}

namespace {

Word min_rotation(const Word& w) {
  Word best = w;
  const int n = w.size();
  Word rot = w;
  for (int i = 1; i < n; ++i) {
    std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
    if (rot.letters < best.letters) best = rot;
  }
  return best;
}

}  // namespace

ConjClass conj_class(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) throw std::invalid_argument("conj_class: empty word");
  const Word r1 = min_rotation(c);
  const Word r2 = min_rotation(inverse(c));
  return {r1.letters < r2.letters ? r1 : r2};
}

Word commutator(const Word& u, const Word& v) {
  return u * v * inverse(u) * inverse(v);
}

Word peripheral_torus_word() {
  return commutator(parse_word("a"), parse_word("b"));
}

bool is_peripheral(const Word& w, const Word& peripheral) {
  const Word c = cyclic_reduce(w);
  if (c.empty()) return false;
  const ConjClass pc = conj_class(peripheral);
  const int lp = pc.canonical.size();
  if (lp == 0 || c.size() % lp != 0) return false;
  const int k = c.size() / lp;
  return conj_class(c) == conj_class(power(pc.canonical, k));
}

std::vector<ConjClass> enumerate_classes(int maxLen, bool excludePeripheral,
                                         int nGens, const Word& peripheral) {
  if (maxLen < 1) throw std::invalid_argument("enumerate_classes: maxLen >= 1");
  std::vector<ConjClass> out;
  const int nLetters = 2 * nGens;
  std::vector<int8_t> cur;

  // depth-first generation in code order emits (length, lex)-sorted words
  auto emit = [&](int len, auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      // cyclically reduced?
      if (cur.front() == letter_inverse(cur.back()) && len >= 2) return;
      Word w;
      w.letters = cur;
      const ConjClass cc = conj_class(w);
      if (cc.canonical == w) {  // canonical representatives only
        if (!excludePeripheral || !is_peripheral(w, peripheral))
          out.push_back(cc);
      }
      return;
    }
    for (Letter l = 0; l < nLetters; ++l) {
      if (!cur.empty() && cur.back() == letter_inverse(l)) continue;
      cur.push_back(static_cast<int8_t>(l));
      self(len, self);
      cur.pop_back();
    }
  };

  for (int len = 1; len <= maxLen; ++len) {
    cur.clear();
    emit(len, emit);
  }
  return out;
}

Word FreeAutomorphism::apply(const Word& w) const {
  std::vector<Letter> raw;
  for (int8_t l : w.letters) {
    const int g = letter_gen(l);
    if (g >= rank()) throw std::invalid_argument("automorphism: generator out of range");
    if (!letter_inv(l)) {
      for (int8_t x : images[g].letters) raw.push_back(x);
    } else {
      const Word im = inverse(images[g]);
      for (int8_t x : im.letters) raw.push_back(x);
    }
  }
  return reduce(raw);
}

Word FreeAutomorphism::applyInverse(const Word& w) const {
  return FreeAutomorphism{inverseImages, images}.apply(w);
}

FreeAutomorphism identity_automorphism(int nGens) {
  FreeAutomorphism phi;
  for (int g = 0; g < nGens; ++g) {
    Word w;
    w.letters.push_back(static_cast<int8_t>(make_letter(g, false)));
    phi.images.push_back(w);
    phi.inverseImages.push_back(w);
  }
  return phi;
}

FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
  FreeAutomorphism r;
  const int n = psi.rank();
  r.images.reserve(n);
  r.inverseImages.reserve(n);
  for (int g = 0; g < n; ++g) r.images.push_back(phi.apply(psi.images[g]));
  for (int g = 0; g < n; ++g)
    r.inverseImages.push_back(psi.applyInverse(phi.inverseImages[g]));
  return r;
}

namespace {
FreeAutomorphism make_auto(const char* ia, const char* ib, const char* ja,
                           const char* jb) {
  return {{parse_word(ia), parse_word(ib)}, {parse_word(ja), parse_word(jb)}};
}
}  // namespace

FreeAutomorphism nielsen_twist_r() { return make_auto("ab", "b", "aB", "b"); }
FreeAutomorphism nielsen_twist_r_inv() { return make_auto("aB", "b", "ab", "b"); }
FreeAutomorphism nielsen_twist_l() { return make_auto("a", "ba", "a", "bA"); }
FreeAutomorphism nielsen_twist_l_inv() { return make_auto("a", "bA", "a", "ba"); }
FreeAutomorphism nielsen_swap() { return make_auto("b", "A", "B", "a"); }
FreeAutomorphism nielsen_invert() { return make_auto("A", "B", "A", "B"); }

std::vector<FreeAutomorphism> nielsen_generators() {
  return {nielsen_twist_r(), nielsen_twist_r_inv(), nielsen_twist_l(),
          nielsen_twist_l_inv(), nielsen_swap(), nielsen_invert()};
}

Rational parse_slope(const std::string& s) {
  Rational r;
  const auto pos = s.find('/');
  try {
    if (pos == std::string::npos) {
      r.p = std::stoll(s);
      r.q = 1;
    } else {
      r.p = std::stoll(s.substr(0, pos));
      r.q = std::stoll(s.substr(pos + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_slope: expected p or p/q, got '" + s + "'");
  }
  if (r.p == 0 && r.q == 0) throw std::invalid_argument("parse_slope: 0/0");
  const long long g = std::gcd(std::abs(r.p), std::abs(r.q));
  if (g > 1) throw std::invalid_argument("parse_slope: p/q must be in lowest terms");
  return r;
}

std::string slope_string(const Rational& r) {
  return std::to_string(r.p) + "/" + std::to_string(r.q);
}

void abelianize(const Word& w, long long& na, long long& nb) {
  na = nb = 0;
  for (int8_t l : w.letters) {
    const long long s = letter_inv(l) ? -1 : 1;
    if (letter_gen(l) == 0)
      na += s;
    else if (letter_gen(l) == 1)
      nb += s;
  }
}

FreeAutomorphism slope_automorphism(const Rational& slope) {
  // Target: the image of a has homology (q, p). Run the Euclidean
  // algorithm on (u, v) = (q, p) with the elementary moves
  //   L^k : (x, y) -> (x + k y, y)     (a -> a, b -> b a^k)
  //   R^k : (x, y) -> (x, y + k x)     (a -> a b^k, b -> b)
  // recording the moves, then rebuild the automorphism left to right.
  long long u = slope.q, v = slope.p;
  if (u == 0 && v == 0) throw std::invalid_argument("slope_automorphism: zero slope vector");
  // unoriented curve: normalize the leading sign
  if (u < 0 || (u == 0 && v < 0)) {
    u = -u;
    v = -v;
  }

  struct Move {
    char kind;  // 'L' or 'R'
    long long k;
  };
  std::vector<Move> moves;
  while (!(v == 0 || u == 0)) {
    if (std::abs(u) >= std::abs(v)) {
      const long long k = u / v;  // truncated
      u -= k * v;
      moves.push_back({'L', k});
    } else {
      const long long k = v / u;
      v -= k * u;
      moves.push_back({'R', k});
    }
  }

  FreeAutomorphism phi = identity_automorphism(2);
  if (u == 0) {
    // base (0, +/-1): quarter turn, then the hyperelliptic flip if needed
    phi = nielsen_swap();
    if (v < 0) phi = compose(phi, nielsen_invert());
  } else if (u < 0) {
    phi = nielsen_invert();
  }
  // phi_total = E_1 o E_2 o ... o E_n o base, moves recorded as E_n last
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    FreeAutomorphism e = identity_automorphism(2);
    const int k = static_cast<int>(it->k);
    if (it->kind == 'L') {
      // a -> a, b -> b a^k
      e.images[1] = parse_word("b") * power(parse_word("a"), k);
      e.inverseImages[1] = parse_word("b") * power(parse_word("a"), -k);
    } else {
      // a -> a b^k, b -> b
      e.images[0] = parse_word("a") * power(parse_word("b"), k);
      e.inverseImages[0] = parse_word("a") * power(parse_word("b"), -k);
    }
    phi = compose(e, phi);
  }
  return phi;
}

}  // namespace teich
