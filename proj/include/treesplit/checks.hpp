#pragma once

#include <cstdint>

#include "treesplit/isometry.hpp"

namespace treesplit {

// Edge subgroup properly contained in both endpoint vertex groups: shortlex
// search for a vertex-group element outside the edge subgroup, per endpoint.
// Verified with witnesses (membership is exact in the factors), else
// NoViolationUpTo.
CheckReport check_c1(const Splitting& s, int bound = 6);

// Stabilizers of the edges incident to `vertex`: enumerates conjugates
// (g a) <c> (g a)^-1 over transversal reps a with |a| <= conj_bound and tests
// every ordered pair for strict containment, powers up to power_bound.
CheckReport check_c2(const Splitting& s, const TreeVertex& vertex,
                     int conj_bound, int power_bound);

// Every word in `words` (assumed nontrivial) must move some vertex or edge of
// the radius-`ball_radius` ball around the base vertex. Witnesses replayed.
CheckReport check_faithful_words(const Splitting& s,
                                 const std::vector<Word>& words,
                                 int ball_radius, int transversal_bound = 2,
                                 Exec exec = Exec::Parallel);

// Same over all nontrivial words of length <= word_bound (identity filtered
// by the splitting solver).
CheckReport check_faithful(const Splitting& s, int word_bound, int ball_radius,
                           int transversal_bound = 2,
                           Exec exec = Exec::Parallel);

// Not-a-line: exhibit a ball vertex of degree >= 3 (exact when found).
// Minimality evidence: every ball vertex lies on a geodesic between two
// orbit points of the base vertex (bounded search over translates).
CheckReport check_minimal_and_not_line(const Splitting& s, int radius,
                                       int transversal_bound = 2);

// Independent witnesses x, y, z with phi(G_v1) = x G_v1 x^-1,
// phi(G_v2) = y G_v2 y^-1, phi(G_e) = z G_e z^-1 (shortlex search up to
// `bound`), plus whether one common witness works for the whole edge.
CheckReport check_lambda_membership(const Splitting& s, const Automorphism& phi,
                                    int bound, int membership_bound = 64);

// Identity family t^k x^{k p^k} t^-k = x^{k q^k} for k = 1..k_max, and the
// scaled defining relation t x^{np} t^-1 = x^{nq} for n = 1..k_max.
CheckReport bs_suite(int p, int q, int k_max);

// Cross-validates the splitting solver against `reference` (same alphabet):
// exhaustively on all freely reduced words of length <= exhaustive_len, then
// on `random_count` seeded random reduced words of length <= random_len.
CheckReport solver_agreement(const Splitting& s, const Group& reference,
                             int exhaustive_len, int random_count,
                             int random_len, std::uint64_t seed,
                             Exec exec = Exec::Parallel);

// Seeded deterministic sample of freely reduced words, lengths 1..max_len.
std::vector<Word> sample_reduced_words(const Alphabet& alphabet, int count,
                                       int max_len, std::uint64_t seed);

}  // namespace treesplit
