#include "treesplit/isometry.hpp"

#include <atomic>

#include "treesplit/parallel.hpp"

namespace treesplit {

namespace {

Word conj(const Word& x, const Word& w) {
  return free_reduce(x * w * x.inverse());
}

// phi(<gens>) inside x H x^-1, both containment directions, where membership
// in H is given by `in_h`.
template <typename InH>
bool conjugation_condition(const Automorphism& phi, const Word& x,
                           const std::vector<Word>& h_gens, InH&& in_h) {
  Word xi = free_reduce(x.inverse());
  for (const Word& h : h_gens) {
    if (!in_h(conj(xi, phi.apply(h)))) return false;
    if (!in_h(phi.apply_inverse(conj(x, h)))) return false;
  }
  return true;
}

std::vector<Word> generator_words(const Group& g) {
  std::vector<Word> out;
  for (GenId gen : g.presentation().generators) {
    out.push_back(Word::generator(gen));
  }
  return out;
}

}  // namespace

namespace witness {

bool vertex1(const Splitting& s, const Automorphism& phi, const Word& x,
             int bound) {
  if (s.is_hnn()) {
    return conjugation_condition(phi, x, generator_words(s.hnn_data().a),
                                 [&](const Word& w) {
                                   return s.in_base_vertex_group(w, bound);
                                 });
  }
  return conjugation_condition(
      phi, x, generator_words(s.amalgam_data().a),
      [&](const Word& w) { return s.in_factor(w, Factor::A, bound); });
}

bool vertex2(const Splitting& s, const Automorphism& phi, const Word& x,
             int bound) {
  if (s.is_hnn()) {
    // G_v2 = t^-1 A t
    Word t = Word::generator(s.hnn_data().stable);
    std::vector<Word> v2_gens;
    for (const Word& a : generator_words(s.hnn_data().a)) {
      v2_gens.push_back(free_reduce(t.inverse() * a * t));
    }
    auto in_v2 = [&](const Word& w) {
      return s.in_base_vertex_group(free_reduce(t * w * t.inverse()), bound);
    };
    return conjugation_condition(phi, x, v2_gens, in_v2);
  }
  return conjugation_condition(
      phi, x, generator_words(s.amalgam_data().b),
      [&](const Word& w) { return s.in_factor(w, Factor::B, bound); });
}

bool edge(const Splitting& s, const Automorphism& phi, const Word& x,
          int bound) {
  const Word& c = s.edge_generator();
  if (c.empty()) return true;
  Membership m =
      s.edge_membership(conj(free_reduce(x.inverse()), phi.apply(c)), bound);
  return m.is_member() && (m.power == 1 || m.power == -1);
}

}  // namespace witness

CheckReport certify_isometry(const Splitting& s, const ExtendedIsometry& iso,
                             int bound) {
  CheckReport report;
  report.name = "isometry_certificate";
  report.bounds = "membership_bound=" + std::to_string(bound);
  const Automorphism& phi = iso.phi;
  const Word& x = iso.witness;
  auto fail = [&](const std::string& what) {
    report.verdict = Verdict::ViolationWitness;
    report.witness = what;
    return report;
  };

  if (!witness::vertex1(s, phi, x, bound)) {
    return fail("vertex group G_v1 condition");
  }
  if (!witness::vertex2(s, phi, x, bound)) {
    return fail("vertex group G_v2 condition");
  }
  if (s.is_hnn()) {
    // orbit well-definedness: t^-1 x^-1 phi(t) x normalizes G_v1, hence must
    // lie in it
    Word t = Word::generator(s.hnn_data().stable);
    Word wd = free_reduce(t.inverse() * x.inverse() * phi.apply(t) * x);
    if (!s.in_base_vertex_group(wd, bound)) {
      return fail("orbit well-definedness t^-1 x^-1 phi(t) x");
    }
  }
  if (!witness::edge(s, phi, x, bound)) {
    return fail("edge group condition");
  }
  report.verdict = Verdict::Verified;
  return report;
}

std::optional<ExtendedIsometry> find_witness(const Splitting& s,
                                             const Automorphism& phi,
                                             int bound) {
  ExtendedIsometry iso{phi, Word()};
  if (certify_isometry(s, iso).verdict == Verdict::Verified) return iso;
  std::optional<ExtendedIsometry> found;
  for_each_reduced_word(s.whole_alphabet(), bound, [&](const Word& x) {
    ExtendedIsometry cand{phi, x};
    if (certify_isometry(s, cand).verdict == Verdict::Verified) {
      found = cand;
      return false;
    }
    return true;
  });
  return found;
}

ExtendedIsometry inner_isometry(const Splitting& s, const Word& conjugator) {
  ExtendedIsometry iso{Automorphism::inner(s.whole(), conjugator),
                       free_reduce(conjugator)};
  CheckReport r = certify_isometry(s, iso);
  if (r.verdict != Verdict::Verified) {
    throw std::logic_error("inner isometry failed certification: " + r.witness);
  }
  return iso;
}

TreeVertex apply(const Splitting& s, const ExtendedIsometry& iso,
                 const TreeVertex& v) {
  return TreeVertex{v.orbit,
                    free_reduce(iso.phi.apply(v.rep) * iso.witness)};
}

TreeEdge apply(const Splitting& s, const ExtendedIsometry& iso,
               const TreeEdge& e) {
  return TreeEdge{free_reduce(iso.phi.apply(e.rep) * iso.witness)};
}

ExtendedIsometry invert(const Splitting& s, const ExtendedIsometry& iso) {
  ExtendedIsometry out{iso.phi.inverse(),
                       iso.phi.apply_inverse(iso.witness.inverse())};
  CheckReport r = certify_isometry(s, out);
  if (r.verdict != Verdict::Verified) {
    throw std::logic_error("inverse witness failed re-certification: " +
                           r.witness);
  }
  return out;
}

ExtendedIsometry compose(const Splitting& s, const ExtendedIsometry& outer,
                         const ExtendedIsometry& inner) {
  ExtendedIsometry out{
      outer.phi.compose_after(inner.phi),
      free_reduce(outer.phi.apply(inner.witness) * outer.witness)};
  CheckReport r = certify_isometry(s, out);
  if (r.verdict != Verdict::Verified) {
    throw std::logic_error("composed witness failed re-certification: " +
                           r.witness);
  }
  return out;
}

CheckReport check_compatibility(const Splitting& s, const ExtendedIsometry& iso,
                                const TreeBall& ball,
                                const std::vector<Word>& group_sample,
                                Exec exec) {
  CheckReport report;
  report.name = "compatibility";
  report.bounds = "sample=" + std::to_string(group_sample.size()) +
                  " ball=" + std::to_string(ball.size());
  const std::size_t nu = ball.size();
  const std::size_t total = group_sample.size() * nu;
  // Because apply() acts on representatives, the intertwining identity
  // apply(g.u) == phi(g).apply(u) holds syntactically for any witness. The
  // content of compatibility is that the map is well defined on cosets:
  // replacing a representative by another one of the same vertex (right
  // multiplication by a stabilizer generator) must not move the image.
  std::vector<std::uint8_t> ok(total, 1);
  parallel_for(total, exec, [&](std::size_t idx) {
    const Word& g = group_sample[idx / nu];
    const TreeVertex& u = ball.vertices[idx % nu];
    TreeVertex v = act(s, g, u);
    TreeVertex image = apply(s, iso, v);
    TreeVertex rhs = act(s, iso.phi.apply(g), apply(s, iso, u));
    if (!vertex_equal(s, image, rhs)) ok[idx] = 0;
    for (GenId h : s.factor(v.orbit).presentation().generators) {
      TreeVertex alt{v.orbit, free_reduce(v.rep * Word::generator(h))};
      if (!vertex_equal(s, apply(s, iso, alt), image)) ok[idx] = 0;
    }
  });
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (!ok[idx]) {
      report.verdict = Verdict::ViolationWitness;
      report.witness = "g=" + format_word(group_sample[idx / nu]) +
                       " vertex=" + format_word(ball.vertices[idx % nu].rep);
      return report;
    }
  }
  // edges: representative independence and consistency of the endpoints of
  // the image edge with the images of the endpoints
  for (const Word& g : group_sample) {
    for (std::size_t i = 1; i < ball.size(); ++i) {
      TreeEdge e = act(s, g, ball.parent_edge[i]);
      TreeEdge image = apply(s, iso, e);
      bool bad = false;
      if (!s.edge_generator().empty()) {
        TreeEdge alt{free_reduce(e.rep * s.edge_generator())};
        if (!edge_equal(s, apply(s, iso, alt), image)) bad = true;
      }
      auto [p, q] = endpoints(s, e);
      auto [ip, iq] = endpoints(s, image);
      if (!vertex_equal(s, apply(s, iso, p), ip) ||
          !vertex_equal(s, apply(s, iso, q), iq)) {
        bad = true;
      }
      if (bad) {
        report.verdict = Verdict::ViolationWitness;
        report.witness = "g=" + format_word(g) + " edge=" + format_word(e.rep);
        return report;
      }
    }
  }
  report.verdict = Verdict::Verified;
  return report;
}

namespace {

template <typename Move>
IsometryClass classify_impl(const Splitting& s, const TreeVertex& probe,
                            Move&& move) {
  IsometryClass out;
  TreeVertex v1 = move(probe);
  int d1 = distance_geodesic(s, probe, v1).distance;
  if (d1 == 0) {
    out.kind = IsometryClass::Kind::Elliptic;
    out.fixed = probe;
    return out;
  }
  TreeVertex v2 = move(v1);
  int d2 = distance_geodesic(s, probe, v2).distance;
  if (d2 > d1) {
    out.kind = IsometryClass::Kind::Hyperbolic;
    out.translation_length = d2 - d1;
    return out;
  }
  // elliptic: without inversions the displacement is even and the midpoint
  // of [v, mv] is fixed
  Geodesic geo = distance_geodesic(s, probe, v1);
  if (d1 % 2 == 0) {
    TreeVertex mid = geo.path[static_cast<std::size_t>(d1 / 2)];
    if (vertex_equal(s, move(mid), mid)) {
      out.kind = IsometryClass::Kind::Elliptic;
      out.fixed = mid;
      return out;
    }
  }
  out.kind = IsometryClass::Kind::UnknownWithinBound;
  return out;
}

}  // namespace

IsometryClass classify_element(const Splitting& s, const Word& g,
                               const TreeVertex& probe) {
  return classify_impl(s, probe,
                       [&](const TreeVertex& v) { return act(s, g, v); });
}

IsometryClass classify_isometry(const Splitting& s, const ExtendedIsometry& iso,
                                const TreeVertex& probe) {
  return classify_impl(s, probe,
                       [&](const TreeVertex& v) { return apply(s, iso, v); });
}

}  // namespace treesplit
