#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teich/spectrum.hpp"
#include "teich/words.hpp"

// Bass-Serre tree of the HNN splitting dual to a simple closed curve on
// the once-punctured torus. Cutting along the curve a gives
//   F(a,b) = < V, b | b a b^-1 = c >,  V = <a, c> free,  edge group <a>,
// so translation length is the stable-letter count after Britton
// reduction, times the edge weight. Other slopes are transported through
// the mapping class carrying the slope to 0.

namespace teich {

struct DualTreeModel {
  Rational slope{0, 1};
  double weight = 1.0;
  FreeAutomorphism basisChange;  // carries the slope-(p/q) class to class(a)
};

DualTreeModel dual_tree_model(const Rational& slope, double weight);

// Stable letters remaining after cyclic Britton reduction, times weight;
// 0 iff w is conjugate into the vertex group (elliptic). Throws on the
// empty word.
double britton_length(const DualTreeModel& m, const Word& w);

// Stable letters of the linear Britton form of w: the tree distance
// d(V, wV) in edge units (slope-0 coordinates).
int britton_stable_count(const Word& w);

// Canonical identifiers: gV = hV iff vertex keys agree; gA = hA iff edge
// keys agree (slope-0 coordinates).
std::string vertex_key(const Word& g);
std::string edge_key(const Word& g);

// l_T(g^n h^m) - l_T(g^n) - l_T(h^m); constant in (n, m) for fixed g, h
// translating along distinct axes.
double culler_morgan_gap(const DualTreeModel& m, const Word& g, const Word& h,
                         int n, int mm);

// Per-class britton_length; zero entries (elliptic classes) permitted.
LengthSpectrum tree_length_function(const DualTreeModel& m,
                                    const std::vector<ConjClass>& classes);
LengthSpectrum tree_length_function_serial(const DualTreeModel& m,
                                           const std::vector<ConjClass>& classes);

struct OracleResult {
  double value = 0.0;
  bool conclusive = false;
};

// Explicit ball of the Bass-Serre tree at slope 0: vertices are cosets gV
// for reduced words |g| <= radius, edges come from stable-letter
// multiplication. An independent oracle for translation lengths via
// min over ball vertices of d(v, w v).
class TreeBall {
 public:
  explicit TreeBall(int radius);

  // min over enumerated vertices of d(v, wv), in edge units. Inconclusive
  // when the minimum is attained only on the enumeration boundary.
  OracleResult min_displacement(const Word& w) const;

  int vertex_count() const { return static_cast<int>(reps_.size()); }
  int edge_count() const { return edgeCount_; }
  const std::vector<Word>& vertex_reps() const { return reps_; }
  // Edges as pairs of representative words (g, g b^e).
  const std::vector<std::pair<Word, Word>>& edge_reps() const { return edgeReps_; }

 private:
  int radius_;
  std::vector<Word> reps_;        // one representative per vertex
  std::vector<int> minRepLen_;    // per vertex
  std::vector<int> depth_, comp_;
  std::vector<std::vector<int>> up_;  // binary lifting for LCA
  int edgeCount_ = 0;
  std::vector<std::pair<Word, Word>> edgeReps_;

  int id_of(const std::string& key) const;
  int lca(int u, int v) const;
  int tree_distance(int u, int v) const;  // -1 if different components

  friend OracleResult tree_ball_oracle(const DualTreeModel&, const Word&, int);
  std::vector<std::string> keys_;

 public:
  // d(gV, hV) within the ball, -1 when not determined by the ball.
  int ball_vertex_distance(const Word& g, const Word& h) const;
};

OracleResult tree_ball_oracle(const DualTreeModel& m, const Word& w, int radius);

// --- points of the tree (for the Gromov machinery) ---------------------

// Point on the edge (gV, gbV) at distance offset (in weight units) from
// the gV end. The edge base word is kept canonical.
struct TreePoint {
  Word edgeBase;
  double offset = 0.0;
};

TreePoint tree_base_point();  // the vertex V
TreePoint make_tree_point(const Word& edgeBase, double offset);

// Intrinsic distance between tree points (weight units).
double tree_point_distance(const DualTreeModel& m, const TreePoint& p,
                           const TreePoint& q);

// gamma . p through the model's basis change.
TreePoint tree_translate(const DualTreeModel& m, const Word& gamma, const TreePoint& p);

// Exact tree distance between vertex cosets, in edge units (slope 0).
int vertex_distance(const Word& g, const Word& h);

Word edge_canonical_word(const Word& g);

}  // namespace teich
