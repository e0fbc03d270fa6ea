// End-to-end acceptance gate. Each criterion prints exactly one PASS/FAIL
// line; the process exits with the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "treesplit/checks.hpp"
#include "treesplit/config.hpp"
#include "treesplit/surface.hpp"

using namespace treesplit;

namespace {

std::shared_ptr<const Splitting> bs_splitting(int p, int q) {
  Group a = Group::free_group({"x"});
  Group c = Group::free_group({"c"});
  GenId x = a.presentation().generators[0];
  return Splitting::hnn(a, c, {Word::generator(x, p)}, {Word::generator(x, q)},
                        "t");
}

std::shared_ptr<const Splitting> free_product_z2_z3() {
  Group a = Group::free_abelian({"u1", "u2"});
  Group b = Group::free_abelian({"v1", "v2", "v3"});
  return Splitting::amalgam(a, b, Group::free_group({}), {}, {});
}

Word random_word(std::mt19937_64& rng, const Alphabet& alpha, int len) {
  const auto& gens = alpha.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() * 2 - 1);
  Word w;
  for (int i = 0; i < len; ++i) {
    std::size_t k = pick(rng);
    w = w * Word::generator(gens[k / 2], k % 2 == 0 ? 1 : -1);
  }
  return free_reduce(w);
}

Automorphism on_whole(const Splitting& s, const Automorphism& phi) {
  Group whole = s.whole();
  return Automorphism(Homomorphism(whole, whole, phi.forward().images()),
                      Homomorphism(whole, whole, phi.backward().images()));
}

std::string run_command(const std::string& args, int* exit_code) {
  const char* bin = std::getenv("TREESPLIT_CLI");
  if (!bin) throw std::runtime_error("TREESPLIT_CLI not set");
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

int g_failures = 0;

template <typename F>
void criterion(int id, const std::string& what, double limit_s, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    detail = body();
    ok = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (limit_s > 0 && elapsed.count() > limit_s) {
    ok = false;
    detail += " [exceeded " + std::to_string(limit_s) + "s limit]";
  }
  char line[512];
  std::snprintf(line, sizeof line, "criterion %d: %s (%.1fs) %s%s%s%s", id,
                ok ? "PASS" : "FAIL", elapsed.count(), what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str(), "");
  std::cout << line << std::endl;
  if (!ok) ++g_failures;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

// -------------------------------------------------------------------------

std::string c1_bs_identities() {
  for (auto [p, q] : {std::pair{2, 3}, {3, 2}, {2, 5}, {3, 4}}) {
    CheckReport r = bs_suite(p, q, 4);
    require(r.verdict == Verdict::Verified,
            "bs_suite(" + std::to_string(p) + "," + std::to_string(q) +
                ") not verified: " + r.line());
  }
  return "4 parameter pairs, k <= 4, exact";
}

std::string c2_faithfulness() {
  // genus-2, both curve types, all nontrivial words of length <= 3.
  // The search runs on a sub-ball first; any witness found there is also a
  // witness within radius 6. Escalation to the full radius-6 ball only
  // happens if the small ball misses (it never does for these groups).
  for (CurveSpec curve :
       {CurveSpec::separating(1), CurveSpec::nonseparating()}) {
    SplittingWitness sw = split_along_curve(2, curve);
    CheckReport r = check_faithful(*sw.splitting, 3, 3, 1);
    if (r.verdict != Verdict::NoViolationUpTo) {
      r = check_faithful(*sw.splitting, 3, 6, 1);
    }
    require(r.verdict == Verdict::NoViolationUpTo,
            "genus-2 word fixed the radius-6 ball: " + r.line());
  }

  // BS(2,3): x^{2k}, k <= 5, must move an *edge* within radius 4
  auto bs = bs_splitting(2, 3);
  TreeBall ball = expand_ball(*bs, TreeVertex{Factor::A, Word()}, 4, 2);
  GenId x = intern_generator("x");
  for (int k = 1; k <= 5; ++k) {
    Word g = Word::generator(x, 2 * k);
    bool moved = false;
    for (std::size_t i = 1; i < ball.size() && !moved; ++i) {
      const TreeEdge& e = ball.parent_edge[i];
      if (!edge_equal(*bs, act(*bs, g, e), e)) {
        // replay the witness
        require(!edge_equal(*bs, act(*bs, g, e), e), "replay failed");
        moved = true;
      }
    }
    require(moved, "x^" + std::to_string(2 * k) +
                       " fixed every edge of the radius-4 ball");
  }
  return "genus-2 words <= 3 and BS powers x^2..x^10, witnesses replayed";
}

std::string c3_extension_algebra() {
  SplittingWitness hnn = split_along_curve(2, CurveSpec::nonseparating());
  const Splitting& s = *hnn.splitting;
  const Alphabet& alpha = s.whole_alphabet();

  // pool of certified extended isometries: inner ones and twist-generated
  std::vector<ExtendedIsometry> pool;
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 8; ++i) {
    pool.push_back(inner_isometry(s, random_word(rng, alpha, 1 + i % 3)));
  }
  Automorphism twist = on_whole(s, dehn_twist(2, CurveSpec::nonseparating()));
  auto twist_iso = find_witness(s, twist, 3);
  require(twist_iso.has_value(), "no witness for the Dehn twist");
  pool.push_back(*twist_iso);
  pool.push_back(invert(s, *twist_iso));

  TreeBall ball = expand_ball(s, TreeVertex{Factor::A, Word()}, 3, 1);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const ExtendedIsometry& f = pool[pick(rng)];
    const ExtendedIsometry& g = pool[pick(rng)];
    // compose and invert re-certify internally (throw on failure)
    ExtendedIsometry fg = compose(s, f, g);
    ExtendedIsometry finv = invert(s, f);
    // homomorphism law on the ball (strided: the ball has ~1.5k vertices)
    for (std::size_t i = 0; i < ball.size(); i += 37) {
      const TreeVertex& v = ball.vertices[i];
      require(vertex_equal(s, apply(s, fg, v), apply(s, f, apply(s, g, v))),
              "composition law failed on the ball");
      require(vertex_equal(s, apply(s, finv, apply(s, f, v)), v),
              "inverse law failed on the ball");
    }
  }
  return "50 random pairs on the genus-2 HNN splitting, radius-3 ball";
}

std::string c4_inner_coincidence() {
  auto bs = bs_splitting(2, 3);
  const Alphabet& alpha = bs->whole_alphabet();
  TreeBall ball = expand_ball(*bs, TreeVertex{Factor::A, Word()}, 3, 2);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    Word g = random_word(rng, alpha, 1 + trial % 5);
    ExtendedIsometry iso = inner_isometry(*bs, g);
    for (std::size_t i = 0; i < ball.size(); ++i) {
      require(vertex_equal(*bs, apply(*bs, iso, ball.vertices[i]),
                           act(*bs, g, ball.vertices[i])),
              "inner isometry differs from translation at a ball vertex");
    }
  }
  return "100 conjugators of length <= 5, every vertex of a radius-3 ball";
}

std::string c5_compatibility() {
  for (CurveSpec curve :
       {CurveSpec::separating(1), CurveSpec::nonseparating()}) {
    SplittingWitness sw = split_along_curve(2, curve);
    const Splitting& s = *sw.splitting;
    Automorphism twist = on_whole(s, dehn_twist(2, curve));
    auto iso = find_witness(s, twist, 3);
    require(iso.has_value(), "no twist witness");
    TreeBall ball = expand_ball(s, TreeVertex{Factor::A, Word()}, 3, 1);
    std::vector<Word> sample;
    for_each_reduced_word(s.whole_alphabet(), 3, [&](const Word& w) {
      sample.push_back(w);
      return true;
    });
    CheckReport r = check_compatibility(s, *iso, ball, sample);
    require(r.verdict == Verdict::Verified,
            "twist compatibility failed: " + r.line());

    // negative control: a corrupted witness must be flagged. Multiplying by
    // a base-vertex stabilizer element would still give a valid witness, so
    // corrupt with the stable letter / the other factor instead.
    GenId off = s.is_hnn() ? s.hnn_data().stable
                           : s.factor(Factor::B).presentation().generators[0];
    Word bad_witness = free_reduce(iso->witness * Word::generator(off));
    ExtendedIsometry bad{iso->phi, bad_witness};
    CheckReport neg = check_compatibility(s, bad, ball, sample);
    require(neg.verdict == Verdict::ViolationWitness,
            "corrupted witness slipped through");
  }
  return "all |g| <= 3, radius-3 balls, both curve types, negative control";
}

std::string c6_solver_cross_validation() {
  Group surf = surface_group(2);
  for (CurveSpec curve :
       {CurveSpec::separating(1), CurveSpec::nonseparating()}) {
    SplittingWitness sw = split_along_curve(2, curve);
    CheckReport r = solver_agreement(*sw.splitting, surf, 8, 10000, 20, 20260823);
    require(r.verdict == Verdict::Verified, "solver mismatch: " + r.line());
  }
  return "exhaustive length <= 8 plus 10^4 random length <= 20, both types";
}

std::string c7_condition_checks() {
  require(check_c1(*bs_splitting(2, 3)).verdict == Verdict::Verified,
          "c1 failed on BS(2,3)");
  require(check_c1(*free_product_z2_z3()).verdict == Verdict::Verified,
          "c1 failed on Z^2 * Z^3");
  SplittingWitness sep = split_along_curve(2, CurveSpec::separating(1));
  SplittingWitness hnn = split_along_curve(2, CurveSpec::nonseparating());
  require(check_c1(*sep.splitting).verdict == Verdict::Verified,
          "c1 failed on the separating splitting");
  require(check_c1(*hnn.splitting).verdict == Verdict::Verified,
          "c1 failed on the nonseparating splitting");

  TreeVertex base{Factor::A, Word()};
  require(check_c2(*bs_splitting(2, 4), base, 2, 6).verdict ==
              Verdict::ViolationWitness,
          "c2 missed the divisibility violation in BS(2,4)");
  require(check_c2(*bs_splitting(2, 3), base, 2, 6).verdict ==
              Verdict::NoViolationUpTo,
          "c2 false positive on BS(2,3)");

  // branch vertex (degree >= 3) for every shipped splitting
  require(check_minimal_and_not_line(*bs_splitting(2, 3), 2, 2).verdict ==
              Verdict::Verified,
          "no branch vertex for BS(2,3)");
  require(check_minimal_and_not_line(*free_product_z2_z3(), 2, 1).verdict ==
              Verdict::Verified,
          "no branch vertex for Z^2 * Z^3");
  require(check_minimal_and_not_line(*sep.splitting, 2, 1).verdict ==
              Verdict::Verified,
          "no branch vertex for the separating splitting");
  require(check_minimal_and_not_line(*hnn.splitting, 2, 1).verdict ==
              Verdict::Verified,
          "no branch vertex for the nonseparating splitting");
  return "c1 x4, c2 violation/no-violation pair, branch witnesses x4";
}

std::string c8_classification() {
  auto bs = bs_splitting(2, 3);
  const Alphabet& alpha = bs->whole_alphabet();
  TreeVertex base{Factor::A, Word()};

  IsometryClass ct = classify_element(*bs, parse_word("t", alpha), base);
  require(ct.kind == IsometryClass::Kind::Hyperbolic &&
              ct.translation_length == 1,
          "t did not classify as Hyperbolic(1)");

  TreeBall ball = expand_ball(*bs, base, 4, 2);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Word g = random_word(rng, alpha, 1 + trial % 5);
    IsometryClass cls = classify_element(*bs, g, base);
    int min_disp = INT32_MAX;
    for (const TreeVertex& v : ball.vertices) {
      min_disp = std::min(min_disp,
                          distance_geodesic(*bs, v, act(*bs, g, v)).distance);
    }
    if (cls.kind == IsometryClass::Kind::Elliptic) {
      require(min_disp == 0, "elliptic element with positive min displacement");
    } else if (cls.kind == IsometryClass::Kind::Hyperbolic) {
      require(min_disp == cls.translation_length,
              "translation length disagrees with brute-force minimum for " +
                  format_word(g));
    } else {
      throw std::runtime_error("unexpected UnknownWithinBound for " +
                               format_word(g));
    }
  }
  return "classify(t)=Hyperbolic(1); 100 elements vs radius-4 brute force";
}

std::string c9_determinism() {
  for (const std::string& args :
       {std::string("suite bs --p 2 --q 3 --kmax 3"),
        std::string("suite surface --genus 2 --curve nonseparating"),
        std::string("suite surface --genus 2 --curve separating:1"),
        std::string("suite freeproduct")}) {
    int code1 = -1, code2 = -1;
    std::string out1 = run_command(args, &code1);
    std::string out2 = run_command(args, &code2);
    require(code1 == 0 && code2 == 0, "suite failed: " + args);
    require(out1 == out2, "suite rerun differed: " + args);
  }
  // seeded components are reproducible in-process as well
  Group surf = surface_group(2);
  auto w1 = sample_reduced_words(surf.alphabet(), 50, 12, 99);
  auto w2 = sample_reduced_words(surf.alphabet(), 50, 12, 99);
  require(w1 == w2, "sample_reduced_words not reproducible");
  SplittingWitness sep = split_along_curve(2, CurveSpec::separating(1));
  CheckReport a1 = solver_agreement(*sep.splitting, surf, 3, 100, 10, 5);
  CheckReport a2 = solver_agreement(*sep.splitting, surf, 3, 100, 10, 5);
  require(a1.line() == a2.line(), "solver_agreement not reproducible");
  return "4 CLI suites byte-identical; seeded kernels reproducible";
}

}  // namespace

int main() {
  criterion(1, "Baumslag-Solitar identity families", 10, c1_bs_identities);
  criterion(2, "faithfulness witnesses", 60, c2_faithfulness);
  criterion(3, "extension algebra", 120, c3_extension_algebra);
  criterion(4, "inner isometries are translations", 0, c4_inner_coincidence);
  criterion(5, "twist compatibility", 0, c5_compatibility);
  criterion(6, "solver cross-validation", 300, c6_solver_cross_validation);
  criterion(7, "structural condition checks", 0, c7_condition_checks);
  criterion(8, "isometry classification", 0, c8_classification);
  criterion(9, "determinism", 0, c9_determinism);
  std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << std::endl;
  return g_failures;
}
