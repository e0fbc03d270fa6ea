#pragma once

#include <optional>

#include "treesplit/parallel.hpp"
#include "treesplit/tree.hpp"

namespace treesplit {

// Automorphism phi together with a conjugating witness x for the base edge
// (identity coset): phi(G_v1) = x G_v1 x^-1, same for G_v2 and G_e. The
// induced tree map sends g*v_i to phi(g)*x*v_i.
struct ExtendedIsometry {
  Automorphism phi;
  Word witness;
};

// Certifies the three conjugation conditions on generating sets, both
// containment directions for the vertex groups, exponent +-1 for the cyclic
// edge group, and (HNN) the orbit well-definedness condition.
CheckReport certify_isometry(const Splitting& s, const ExtendedIsometry& iso,
                             int bound = 64);

// Individual conjugation conditions, for independent witness searches
// (the distinction between one common witness and three separate ones).
namespace witness {
bool vertex1(const Splitting& s, const Automorphism& phi, const Word& x,
             int bound = 64);
bool vertex2(const Splitting& s, const Automorphism& phi, const Word& x,
             int bound = 64);
bool edge(const Splitting& s, const Automorphism& phi, const Word& x,
          int bound = 64);
}  // namespace witness

// Shortlex search for a witness making phi an extended isometry.
std::optional<ExtendedIsometry> find_witness(const Splitting& s,
                                             const Automorphism& phi,
                                             int bound);

ExtendedIsometry inner_isometry(const Splitting& s, const Word& conjugator);

TreeVertex apply(const Splitting& s, const ExtendedIsometry& iso,
                 const TreeVertex& v);
TreeEdge apply(const Splitting& s, const ExtendedIsometry& iso,
               const TreeEdge& e);

// Witness algebra: inverse uses y = phi^-1(x^-1); composition outer∘inner
// uses z = outer(x_inner) * x_outer. Results are re-certified.
ExtendedIsometry invert(const Splitting& s, const ExtendedIsometry& iso);
ExtendedIsometry compose(const Splitting& s, const ExtendedIsometry& outer,
                         const ExtendedIsometry& inner);

// Verifies apply(iso, act(g, u)) == act(phi(g), apply(iso, u)) over the grid
// of sample words and ball vertices/edges.
CheckReport check_compatibility(const Splitting& s, const ExtendedIsometry& iso,
                                const TreeBall& ball,
                                const std::vector<Word>& group_sample,
                                Exec exec = Exec::Parallel);

struct IsometryClass {
  enum class Kind { Elliptic, Hyperbolic, UnknownWithinBound };
  Kind kind = Kind::UnknownWithinBound;
  int translation_length = 0;          // Hyperbolic
  std::optional<TreeVertex> fixed;     // Elliptic
};

// Displacement criterion: d1 = d(v, m v), d2 = d(v, m^2 v); hyperbolic with
// length d2 - d1 when d2 > d1, elliptic otherwise (fixed point at the
// geodesic midpoint).
IsometryClass classify_element(const Splitting& s, const Word& g,
                               const TreeVertex& probe);
IsometryClass classify_isometry(const Splitting& s, const ExtendedIsometry& iso,
                                const TreeVertex& probe);

}  // namespace treesplit
