#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "treesplit/checks.hpp"
#include "treesplit/surface.hpp"

using namespace treesplit;

TEST_CASE("surface group presentations") {
  Group g2 = surface_group(2);
  CHECK(g2.presentation().generators.size() == 4);
  REQUIRE(g2.presentation().relators.size() == 1);
  CHECK(g2.presentation().relators[0].length() == 8);

  Group g3 = surface_group(3);
  CHECK(g3.presentation().generators.size() == 6);
  CHECK(g3.presentation().relators[0].length() == 12);

  CHECK_THROWS_AS(surface_group(1), InputError);
  CHECK_THROWS_AS(surface_group(0), InputError);
}

TEST_CASE("curve words and their splittings are certified on construction") {
  // construction already certifies: both direction maps are homomorphisms,
  // round trips fix generators, and the solvers agree on short words
  SplittingWitness sep = split_along_curve(2, CurveSpec::separating(1));
  CHECK_FALSE(sep.splitting->is_hnn());
  CHECK(sep.to_surface.check().verdict == Verdict::Verified);
  CHECK(sep.from_surface.check().verdict == Verdict::Verified);

  SplittingWitness hnn = split_along_curve(2, CurveSpec::nonseparating());
  CHECK(hnn.splitting->is_hnn());
  CHECK(hnn.to_surface.check().verdict == Verdict::Verified);

  SplittingWitness g3 = split_along_curve(3, CurveSpec::separating(1));
  CHECK_FALSE(g3.splitting->is_hnn());

  CHECK_THROWS_AS(split_along_curve(2, CurveSpec::separating(2)), InputError);
  CHECK_THROWS_AS(split_along_curve(2, CurveSpec::separating(0)), InputError);
}

TEST_CASE("separating curve word is the first handle boundary") {
  Group s = surface_group(2);
  Word c = curve_word(2, CurveSpec::separating(1));
  CHECK(format_word(c) == "a1 b1 a1^-1 b1^-1");
  // in the surface group the relator makes c equal to the inverse of the
  // second handle boundary
  Word h2 = parse_word("a2 b2 a2^-1 b2^-1", s.alphabet());
  CHECK(s.is_identity(free_reduce(c * h2)));
}

TEST_CASE("nonseparating boundary relation holds in both solvers") {
  Group s = surface_group(2);
  // from the relator: b1 a1 b1^-1 = [a2,b2] a1
  Word lhs = parse_word("b1 a1 b1^-1", s.alphabet());
  Word rhs = parse_word("a2 b2 a2^-1 b2^-1 a1", s.alphabet());
  CHECK(s.is_identity(free_reduce(lhs * rhs.inverse())));

  SplittingWitness hnn = split_along_curve(2, CurveSpec::nonseparating());
  Word image = hnn.to_surface.apply(free_reduce(lhs * rhs.inverse()));
  // careful: to_surface goes splitting -> surface; we need the other way
  Word in_split = hnn.from_surface.apply(free_reduce(lhs * rhs.inverse()));
  CHECK(hnn.splitting->is_identity_word(in_split));
  (void)image;
}

TEST_CASE("Dehn twists fix the curve and satisfy the twist algebra") {
  for (CurveSpec curve :
       {CurveSpec::nonseparating(), CurveSpec::separating(1)}) {
    Automorphism t = dehn_twist(2, curve);
    CHECK(t.check().verdict == Verdict::Verified);
    Word c = curve_word(2, curve);
    CHECK(free_reduce(t.apply(c)) == free_reduce(c));

    // powers of the twist stay certified automorphisms and fix the curve
    Automorphism t2 = t.compose_after(t);
    CHECK(t2.check().verdict == Verdict::Verified);
    CHECK(free_reduce(t2.apply(c)) == free_reduce(c));
    // t^-1 t = id on generators
    Automorphism id = t.inverse().compose_after(t);
    for (GenId g : t.group().presentation().generators) {
      CHECK(free_reduce(id.apply(Word::generator(g))) == Word::generator(g));
    }
  }
}

TEST_CASE("a corrupted twist is rejected by the certificates") {
  Group s = surface_group(2);
  Automorphism t = dehn_twist(2, CurveSpec::nonseparating());
  auto fwd = t.forward().images();
  auto bwd = t.backward().images();
  // break one image: b1 -> (twist image) * a2
  GenId b1 = intern_generator("b1");
  fwd[b1] = free_reduce(fwd[b1] * parse_word("a2", s.alphabet()));
  Automorphism broken(Homomorphism(s, s, fwd), Homomorphism(s, s, bwd));
  CHECK(broken.check().verdict == Verdict::ViolationWitness);
}

TEST_CASE("curve stabilizer suites pass for both curve types") {
  SuiteBounds bounds;
  bounds.word_bound = 2;
  bounds.ball_radius = 2;
  SuiteResult hnn = curve_stabilizer_suite(2, CurveSpec::nonseparating(), bounds);
  CHECK(hnn.passed());
  SuiteResult sep = curve_stabilizer_suite(2, CurveSpec::separating(1), bounds);
  CHECK(sep.passed());
  // the summary records the number of sub-checks
  CHECK(hnn.reports.size() == 8);
}

TEST_CASE("splitting solvers track the surface solver on random words") {
  Group s = surface_group(2);
  SplittingWitness sep = split_along_curve(2, CurveSpec::separating(1));
  CheckReport r = solver_agreement(*sep.splitting, s, 5, 500, 14, 3);
  CHECK(r.verdict == Verdict::Verified);

  SplittingWitness hnn = split_along_curve(2, CurveSpec::nonseparating());
  CheckReport r2 = solver_agreement(*hnn.splitting, s, 5, 500, 14, 3);
  CHECK(r2.verdict == Verdict::Verified);
}
