#include "treesplit/surface.hpp"

namespace treesplit {

namespace {

Word commutator(GenId a, GenId b) {
  return Word::generator(a) * Word::generator(b) * Word::generator(a, -1) *
         Word::generator(b, -1);
}

std::string gen_name(char kind, int i) {
  return std::string(1, kind) + std::to_string(i);
}

// [a_lo,b_lo]...[a_hi,b_hi]
Word handle_product(int lo, int hi) {
  Word out;
  for (int i = lo; i <= hi; ++i) {
    out = out * commutator(intern_generator(gen_name('a', i)),
                           intern_generator(gen_name('b', i)));
  }
  return out;
}

void require_curve(int genus, const CurveSpec& curve) {
  if (curve.kind == CurveSpec::Kind::Separating &&
      (curve.h < 1 || curve.h > genus - 1)) {
    throw InputError("separating curve index must satisfy 1 <= h <= genus-1");
  }
}

Automorphism transport(const Automorphism& a, const Group& g) {
  return Automorphism(Homomorphism(g, g, a.forward().images()),
                      Homomorphism(g, g, a.backward().images()));
}

}  // namespace

Group surface_group(int genus) {
  if (genus < 2) {
    throw InputError("surface strategy requires genus >= 2 (hyperbolic)");
  }
  Presentation p;
  for (int i = 1; i <= genus; ++i) {
    p.generators.push_back(intern_generator(gen_name('a', i)));
    p.generators.push_back(intern_generator(gen_name('b', i)));
  }
  p.relators.push_back(handle_product(1, genus));
  return Group::with_strategy(std::move(p), SurfaceStrategy{genus});
}

Word curve_word(int genus, const CurveSpec& curve) {
  require_curve(genus, curve);
  if (curve.kind == CurveSpec::Kind::NonSeparating) {
    return Word::generator(intern_generator("a1"));
  }
  return handle_product(1, curve.h);
}

SplittingWitness split_along_curve(int genus, const CurveSpec& curve) {
  require_curve(genus, curve);
  Group surf = surface_group(genus);

  std::shared_ptr<const Splitting> s;
  if (curve.kind == CurveSpec::Kind::Separating) {
    std::vector<std::string> names_a, names_b;
    for (int i = 1; i <= genus; ++i) {
      auto& dst = i <= curve.h ? names_a : names_b;
      dst.push_back(gen_name('a', i));
      dst.push_back(gen_name('b', i));
    }
    Group fa = Group::free_group(names_a);
    Group fb = Group::free_group(names_b);
    Group c = Group::free_group({"c"});
    // the two boundary words of the cut: [a1,b1]...[ah,bh] on one side and
    // the inverse of the remaining handles on the other
    Word img_a = handle_product(1, curve.h);
    Word img_b = free_reduce(handle_product(curve.h + 1, genus).inverse());
    s = Splitting::amalgam(fa, fb, c, {img_a}, {img_b});
  } else {
    std::vector<std::string> names{"a1"};
    for (int i = 2; i <= genus; ++i) {
      names.push_back(gen_name('a', i));
      names.push_back(gen_name('b', i));
    }
    Group fa = Group::free_group(names);
    Group c = Group::free_group({"c"});
    Word a1 = Word::generator(intern_generator("a1"));
    // b1 a1 b1^-1 = [a2,b2]...[ag,bg] a1, a rearrangement of the relator
    Word img1 = free_reduce(handle_product(2, genus) * a1);
    s = Splitting::hnn(fa, c, {a1}, {img1}, "b1");
  }

  Group whole = s->whole();
  std::map<GenId, Word> fwd, bwd;
  for (GenId g : whole.presentation().generators) fwd[g] = Word::generator(g);
  for (GenId g : surf.presentation().generators) bwd[g] = Word::generator(g);
  SplittingWitness out{s, Homomorphism(whole, surf, std::move(fwd)),
                       Homomorphism(surf, whole, std::move(bwd))};

  // certification: both direction maps respect the relators, the round trips
  // fix the generators, and the two solvers agree on short words
  for (const Homomorphism* h : {&out.to_surface, &out.from_surface}) {
    CheckReport r = h->check();
    if (r.verdict != Verdict::Verified) {
      throw InputError("splitting/surface identification fails the relator "
                       "check: " + r.witness);
    }
  }
  for (GenId g : whole.presentation().generators) {
    Word round =
        free_reduce(out.to_surface.apply(out.from_surface.apply(
            Word::generator(g))));
    if (!(round == Word::generator(g))) {
      throw InputError("round trip does not fix generator " +
                       generator_name(g));
    }
  }
  CheckReport quick = solver_agreement(*s, surf, 4, 0, 1, 0, Exec::Serial);
  if (quick.verdict != Verdict::Verified) {
    throw InputError("splitting and surface solvers disagree: " +
                     quick.witness);
  }
  return out;
}

Automorphism dehn_twist(int genus, const CurveSpec& curve) {
  require_curve(genus, curve);
  Group surf = surface_group(genus);
  Word c = curve_word(genus, curve);

  std::map<GenId, Word> fwd, bwd;
  for (GenId g : surf.presentation().generators) {
    fwd[g] = Word::generator(g);
    bwd[g] = Word::generator(g);
  }
  if (curve.kind == CurveSpec::Kind::NonSeparating) {
    GenId b1 = intern_generator("b1");
    GenId a1 = intern_generator("a1");
    fwd[b1] = Word::generator(b1) * Word::generator(a1);
    bwd[b1] = Word::generator(b1) * Word::generator(a1, -1);
  } else {
    for (int i = curve.h + 1; i <= genus; ++i) {
      for (char kind : {'a', 'b'}) {
        GenId g = intern_generator(gen_name(kind, i));
        fwd[g] = free_reduce(c * Word::generator(g) * c.inverse());
        bwd[g] = free_reduce(c.inverse() * Word::generator(g) * c);
      }
    }
  }
  Automorphism twist(Homomorphism(surf, surf, std::move(fwd)),
                     Homomorphism(surf, surf, std::move(bwd)));
  CheckReport r = twist.check();
  if (r.verdict != Verdict::Verified) {
    throw std::logic_error("Dehn twist failed the automorphism check: " +
                           r.witness);
  }
  // the twist fixes the curve word on the nose, not just up to conjugacy
  if (!(free_reduce(twist.apply(c)) == free_reduce(c))) {
    throw std::logic_error("Dehn twist does not fix the curve word");
  }
  return twist;
}

namespace {

// Bounded malnormality evidence for the edge subgroup inside a vertex group:
// x outside <img> must not conjugate img into <img>.
CheckReport edge_malnormality(const Splitting& s, int bound) {
  CheckReport report;
  report.name = "edge_malnormality";
  report.bounds = "word_bound=" + std::to_string(bound);

  auto scan = [&](const Group& fg, const Word& img,
                  const char* label) -> bool {
    if (img.empty()) return true;
    bool ok = true;
    for_each_reduced_word(fg.alphabet(), bound, [&](const Word& x) {
      if (cyclic_membership(fg, x, img, 64).kind !=
          Membership::Kind::NotMember) {
        return true;
      }
      Word conj = free_reduce(x * img * x.inverse());
      if (cyclic_membership(fg, conj, img, 64).is_member()) {
        report.verdict = Verdict::ViolationWitness;
        report.witness = std::string(label) + ": x=" + format_word(x);
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  };

  bool ok;
  if (s.is_hnn()) {
    ok = scan(s.hnn_data().a, s.edge_image(Factor::A), "emb0") &&
         scan(s.hnn_data().a, s.edge_image_conjugated(), "emb1");
  } else {
    ok = scan(s.factor(Factor::A), s.edge_image(Factor::A), "A") &&
         scan(s.factor(Factor::B), s.edge_image(Factor::B), "B");
  }
  if (ok) {
    report.verdict = Verdict::NoViolationUpTo;
    report.note = "edge subgroup malnormal in the vertex groups at this bound";
  }
  return report;
}

}  // namespace

SuiteResult curve_stabilizer_suite(int genus, const CurveSpec& curve,
                                   const SuiteBounds& b) {
  SuiteResult suite;
  suite.name = "curve_stabilizer_suite";

  SplittingWitness sw = split_along_curve(genus, curve);
  const Splitting& s = *sw.splitting;
  Group whole = s.whole();

  suite.add(check_c1(s, b.c1_bound));
  suite.add(check_faithful(s, b.word_bound, b.ball_radius, b.transversal_bound,
                           b.exec));
  suite.add(check_minimal_and_not_line(s, 2, b.transversal_bound));

  Automorphism twist = transport(dehn_twist(genus, curve), whole);
  std::optional<ExtendedIsometry> ext = find_witness(s, twist, b.witness_bound);
  {
    CheckReport r;
    r.name = "twist_extension";
    r.bounds = "witness_bound=" + std::to_string(b.witness_bound);
    if (ext) {
      r.verdict = Verdict::Verified;
      r.witness = "x=" + format_word(ext->witness);
    } else {
      r.verdict = Verdict::NoViolationUpTo;
      r.note = "no extension witness up to bound";
    }
    suite.add(std::move(r));
  }

  TreeVertex base{Factor::A, Word()};
  TreeBall ball = expand_ball(s, base, 2, b.transversal_bound);
  std::vector<Word> sample;
  for_each_reduced_word(s.whole_alphabet(), 2, [&](const Word& w) {
    sample.push_back(w);
    return true;
  });
  if (ext) {
    CheckReport r = check_compatibility(s, *ext, ball, sample, b.exec);
    r.name = "compatibility_twist";
    suite.add(std::move(r));
  }
  {
    ExtendedIsometry inner = inner_isometry(
        s, Word::generator(s.whole_alphabet().generators().front()));
    CheckReport r = check_compatibility(s, inner, ball, sample, b.exec);
    r.name = "compatibility_inner";
    suite.add(std::move(r));
  }

  suite.add(check_lambda_membership(s, twist, b.witness_bound));
  suite.add(edge_malnormality(s, 3));
  return suite;
}

}  // namespace treesplit
