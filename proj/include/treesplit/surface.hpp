#pragma once

#include "treesplit/checks.hpp"

namespace treesplit {

// Genus-g one-relator presentation <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>
// with the small-cancellation word-problem strategy. Requires g >= 2.
Group surface_group(int genus);

// Standard-position simple closed curve: either the boundary between the
// first h handles and the rest (separating), or the first handle's a-curve
// (nonseparating).
struct CurveSpec {
  enum class Kind { Separating, NonSeparating };
  Kind kind = Kind::NonSeparating;
  int h = 0;  // separating only, 1 <= h <= genus-1

  static CurveSpec separating(int h) { return {Kind::Separating, h}; }
  static CurveSpec nonseparating() { return {Kind::NonSeparating, 0}; }
};

// The curve as a word of the surface group: prod_{i<=h} [a_i, b_i]
// (separating) or a1 (nonseparating).
Word curve_word(int genus, const CurveSpec& curve);

// A splitting together with the certified identification of its group with
// the surface group (generator-for-generator).
struct SplittingWitness {
  std::shared_ptr<const Splitting> splitting;
  Homomorphism to_surface;    // whole -> surface presentation
  Homomorphism from_surface;  // surface -> whole
};

// Separating(h): F_{2h} *_<c> F_{2(g-h)} along the handle boundary.
// Nonseparating: HNN over <a1> with stable letter b1 and
// b1 a1 b1^-1 = [a2,b2]...[ag,bg] a1. Construction aborts unless both
// direction maps pass the relator check, the round trips fix generators,
// and the two word-problem solvers agree on short words.
SplittingWitness split_along_curve(int genus, const CurveSpec& curve);

// Twist along the curve: nonseparating b1 -> b1 a1; separating conjugates
// the generators beyond the h-th handle by the curve word. Certified as an
// automorphism; fixes the curve word on the nose.
Automorphism dehn_twist(int genus, const CurveSpec& curve);

struct SuiteBounds {
  int word_bound = 3;          // faithfulness word lengths
  int ball_radius = 3;
  int transversal_bound = 1;
  int witness_bound = 3;       // lambda / extension witness search
  int conj_bound = 1;          // c2 transversal reps
  int power_bound = 4;
  int c1_bound = 4;
  Exec exec = Exec::Parallel;
};

// End-to-end pipeline: build the splitting, run c1, faithfulness,
// minimality/not-line, extend the twist and an inner automorphism to tree
// isometries with compatibility checks, and the lambda membership test.
SuiteResult curve_stabilizer_suite(int genus, const CurveSpec& curve,
                                   const SuiteBounds& bounds = {});

}  // namespace treesplit
