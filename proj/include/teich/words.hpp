#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Free-group words for pi_1 of the once-punctured torus (rank-2 free group
// F(a,b)) and generic free groups: reduction, conjugacy canonical forms,
// class enumeration, peripheral detection, Nielsen automorphisms.
//
// Letters are encoded as 2*gen + (inverse ? 1 : 0), so the letter order
// a < a^-1 < b < b^-1 < ... is the code order used for all lexicographic
// canonical forms. Strings use 'a'..'z' with uppercase for inverses.

namespace teich {

using Letter = int;

inline Letter make_letter(int gen, bool inv) { return 2 * gen + (inv ? 1 : 0); }
inline int letter_gen(Letter l) { return l >> 1; }
inline bool letter_inv(Letter l) { return (l & 1) != 0; }
inline Letter letter_inverse(Letter l) { return l ^ 1; }

struct Word {
  std::vector<int8_t> letters;  // freely reduced, invariant of the type

  Word() = default;
  explicit Word(const std::vector<Letter>& raw);

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator<(const Word& o) const;  // length, then lexicographic
};

// Free reduction of an arbitrary letter sequence.
Word reduce(const std::vector<Letter>& raw);

Word operator*(const Word& u, const Word& v);
Word inverse(const Word& w);
Word power(const Word& w, int k);

Word parse_word(const std::string& s);  // "" is the identity
std::string word_string(const Word& w);

int max_generator_index(const Word& w);

// Removes matching first/last inverse pairs.
Word cyclic_reduce(const Word& w);

// Canonical form of the conjugacy class of w, identified with the class of
// w^-1: the lexicographically minimal cyclic rotation over both words.
struct ConjClass {
  Word canonical;

  bool operator==(const ConjClass& o) const { return canonical == o.canonical; }
  bool operator<(const ConjClass& o) const { return canonical < o.canonical; }
  std::string str() const { return word_string(canonical); }
};

// Throws on the empty word.
ConjClass conj_class(const Word& w);

Word commutator(const Word& u, const Word& v);
Word peripheral_torus_word();  // [a, b]

// True iff w is conjugate to a power of the peripheral word (or its
// inverse). The power is bounded exactly by cyclic length.
bool is_peripheral(const Word& w, const Word& peripheral = peripheral_torus_word());

// All distinct classes with canonical length <= maxLen over nGens
// generators, in deterministic (length, lex) order.
std::vector<ConjClass> enumerate_classes(int maxLen, bool excludePeripheral,
                                         int nGens = 2,
                                         const Word& peripheral = peripheral_torus_word());

struct FreeAutomorphism {
  std::vector<Word> images;         // generator i -> images[i]
  std::vector<Word> inverseImages;  // stored inverse

  Word apply(const Word& w) const;
  Word applyInverse(const Word& w) const;
  FreeAutomorphism inverted() const { return {inverseImages, images}; }
  int rank() const { return static_cast<int>(images.size()); }
};

FreeAutomorphism identity_automorphism(int nGens = 2);
// phi o psi (psi first).
FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi);

// Mapping-class generators of F(a,b): the two twists, their inverses, the
// quarter-turn swap and the hyperelliptic involution. All preserve the
// class of [a,b] up to conjugation and inversion.
FreeAutomorphism nielsen_twist_r();      // a -> ab, b -> b
FreeAutomorphism nielsen_twist_r_inv();  // a -> ab^-1
FreeAutomorphism nielsen_twist_l();      // b -> ba
FreeAutomorphism nielsen_twist_l_inv();  // b -> ba^-1
FreeAutomorphism nielsen_swap();         // a -> b, b -> a^-1
FreeAutomorphism nielsen_invert();       // a -> a^-1, b -> b^-1
std::vector<FreeAutomorphism> nielsen_generators();

struct Rational {
  long long p = 0, q = 1;  // slope p/q, gcd 1; (1, 0) is the vertical slope
};
Rational parse_slope(const std::string& s);
std::string slope_string(const Rational& r);

// Automorphism carrying the class of a to the simple closed curve of slope
// p/q (homology class (q, p)). Built from the elementary twists, so the
// peripheral class is preserved exactly.
FreeAutomorphism slope_automorphism(const Rational& slope);

// Homology image (in Z^2) of a word, columns a -> (1,0), b -> (0,1).
void abelianize(const Word& w, long long& na, long long& nb);

}  // namespace teich
