#include "treesplit/splitting.hpp"

#include <algorithm>

namespace treesplit {

namespace {

std::map<GenId, Word> image_map(const Group& source, std::vector<Word> images) {
  const auto& gens = source.presentation().generators;
  if (gens.size() != images.size()) {
    throw InputError("embedding image count does not match edge group rank");
  }
  std::map<GenId, Word> m;
  for (std::size_t i = 0; i < gens.size(); ++i) m[gens[i]] = std::move(images[i]);
  return m;
}

void check_embedding(const Homomorphism& emb, const char* label,
                     int injectivity_bound) {
  CheckReport r = emb.check();
  if (r.verdict == Verdict::ViolationWitness) {
    throw InputError(std::string("embedding ") + label +
                     " fails the relator check: " + r.witness);
  }
  // bounded injectivity on generator powers
  for (GenId g : emb.source().presentation().generators) {
    Word img = emb.image(g);
    for (int k = 1; k <= injectivity_bound; ++k) {
      if (emb.target().is_identity(img.pow(k))) {
        throw InputError(std::string("embedding ") + label +
                         " is not injective: generator power " +
                         std::to_string(k) + " maps to the identity");
      }
    }
  }
}

}  // namespace

std::shared_ptr<const Splitting> Splitting::amalgam(Group a, Group b, Group c,
                                                    std::vector<Word> images_a,
                                                    std::vector<Word> images_b,
                                                    int injectivity_bound) {
  if (c.presentation().generators.size() > 1) {
    throw InputError("edge groups must be cyclic or trivial");
  }
  Homomorphism emb_a(c, a, image_map(c, std::move(images_a)));
  Homomorphism emb_b(c, b, image_map(c, std::move(images_b)));
  check_embedding(emb_a, "C->A", injectivity_bound);
  check_embedding(emb_b, "C->B", injectivity_bound);

  auto s = std::shared_ptr<Splitting>(new Splitting());
  s->whole_alphabet_ = Alphabet::disjoint_union(a.alphabet(), b.alphabet());
  s->whole_pres_.generators = s->whole_alphabet_.generators();
  for (const Group* g : {&a, &b}) {
    for (const Word& r : g->presentation().relators) {
      s->whole_pres_.relators.push_back(r);
    }
  }
  for (GenId cg : c.presentation().generators) {
    s->whole_pres_.relators.push_back(
        free_reduce(emb_a.image(cg) * emb_b.image(cg).inverse()));
    s->edge_gen_whole_ = free_reduce(emb_a.image(cg));
  }
  s->data_ = AmalgamData{std::move(a), std::move(b), std::move(c),
                         std::move(emb_a), std::move(emb_b)};
  return s;
}

std::shared_ptr<const Splitting> Splitting::hnn(Group a, Group c,
                                                std::vector<Word> images0,
                                                std::vector<Word> images1,
                                                const std::string& stable_name,
                                                int injectivity_bound) {
  if (c.presentation().generators.size() > 1) {
    throw InputError("edge groups must be cyclic or trivial");
  }
  GenId t = intern_generator(stable_name);
  if (a.alphabet().contains(t)) {
    throw InputError("stable letter '" + stable_name +
                     "' collides with the base group alphabet");
  }
  Homomorphism emb0(c, a, image_map(c, std::move(images0)));
  Homomorphism emb1(c, a, image_map(c, std::move(images1)));
  check_embedding(emb0, "C->A (emb0)", injectivity_bound);
  check_embedding(emb1, "C->A (emb1)", injectivity_bound);

  auto s = std::shared_ptr<Splitting>(new Splitting());
  std::vector<GenId> gens = a.alphabet().generators();
  gens.push_back(t);
  s->whole_alphabet_ = Alphabet(gens);
  s->whole_pres_.generators = gens;
  for (const Word& r : a.presentation().relators) {
    s->whole_pres_.relators.push_back(r);
  }
  for (GenId cg : c.presentation().generators) {
    s->whole_pres_.relators.push_back(
        free_reduce(Word::generator(t) * emb0.image(cg) *
                    Word::generator(t, -1) * emb1.image(cg).inverse()));
    s->edge_gen_whole_ = free_reduce(emb0.image(cg));
  }
  s->data_ = HnnData{std::move(a), std::move(c), std::move(emb0),
                     std::move(emb1), t};
  return s;
}

Group Splitting::whole() const {
  return Group::with_strategy(whole_pres_,
                              FromSplittingStrategy{shared_from_this()});
}

const Group& Splitting::factor(Factor f) const {
  if (is_hnn()) return hnn_data().a;
  return f == Factor::A ? amalgam_data().a : amalgam_data().b;
}

const Word& Splitting::edge_image(Factor f) const {
  static const Word empty;
  if (is_hnn()) {
    const HnnData& d = hnn_data();
    if (d.c.presentation().generators.empty()) return empty;
    return d.emb0.image(d.c.presentation().generators[0]);
  }
  const AmalgamData& d = amalgam_data();
  if (d.c.presentation().generators.empty()) return empty;
  GenId cg = d.c.presentation().generators[0];
  return f == Factor::A ? d.emb_a.image(cg) : d.emb_b.image(cg);
}

const Word& Splitting::edge_image_conjugated() const {
  static const Word empty;
  const HnnData& d = hnn_data();
  if (d.c.presentation().generators.empty()) return empty;
  return d.emb1.image(d.c.presentation().generators[0]);
}

namespace {

Membership piece_in_edge(const Group& factor, const Word& piece,
                         const Word& edge_img, int bound) {
  return cyclic_membership(factor, piece, edge_img, bound);
}

}  // namespace

SyllableForm Splitting::reduce(const Word& w, int bound) const {
  whole_alphabet_.require_word(w);
  SyllableForm form;
  if (is_hnn()) {
    const HnnData& d = hnn_data();
    form.hnn = true;
    const Word& e0 = edge_image(Factor::A);
    const Word& e1 = edge_image_conjugated();

    std::vector<Word> ps(1);
    std::vector<int> es;
    auto try_pinch_last = [&]() {
      // pattern: ... t^{es[i]} ps[i+1] t^{es[i+1]} with the middle piece in
      // the matching embedded edge group
      while (es.size() >= 2) {
        std::size_t i = es.size() - 2;
        const Word& mid = ps[i + 1];
        Membership m;
        const Word* replacement = nullptr;
        if (es[i] == 1 && es[i + 1] == -1) {
          m = piece_in_edge(d.a, mid, e0, bound);
          replacement = &e1;
        } else if (es[i] == -1 && es[i + 1] == 1) {
          m = piece_in_edge(d.a, mid, e1, bound);
          replacement = &e0;
        } else {
          return;
        }
        if (m.kind == Membership::Kind::Unknown) throw ReductionUnknown(bound);
        if (!m.is_member()) return;
        Word merged =
            free_reduce(ps[i] * replacement->pow(m.power) * ps[i + 2]);
        ps.erase(ps.begin() + static_cast<long>(i) + 1,
                 ps.begin() + static_cast<long>(i) + 3);
        es.erase(es.begin() + static_cast<long>(i),
                 es.begin() + static_cast<long>(i) + 2);
        ps[i] = std::move(merged);
      }
    };
    for (const Run& r : w.runs()) {
      if (r.gen == d.stable) {
        int sign = r.exp < 0 ? -1 : 1;
        std::int64_t n = r.exp < 0 ? -r.exp : r.exp;
        for (std::int64_t i = 0; i < n; ++i) {
          es.push_back(sign);
          ps.emplace_back();
          try_pinch_last();
        }
      } else {
        ps.back() = ps.back() * Word::generator(r.gen, r.exp);
      }
    }
    try_pinch_last();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      form.pieces.push_back({Factor::A, d.a.normal_form(ps[i])});
    }
    form.t_exps = std::move(es);
    // a trivial head with no t-letters is the identity form
    if (form.t_exps.empty() && form.pieces.size() == 1 &&
        form.pieces[0].w.empty()) {
      form.pieces.clear();
    }
    return form;
  }

  const AmalgamData& d = amalgam_data();
  // parse into maximal factor runs
  std::vector<SyllableForm::Piece> pieces;
  for (const Run& r : w.runs()) {
    Factor f = d.a.alphabet().contains(r.gen) ? Factor::A : Factor::B;
    if (pieces.empty() || pieces.back().factor != f) {
      pieces.push_back({f, Word::generator(r.gen, r.exp)});
    } else {
      pieces.back().w = pieces.back().w * Word::generator(r.gen, r.exp);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // drop trivial pieces, merging equal-factor neighbors
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Group& fg = factor(pieces[i].factor);
      if (fg.is_identity(pieces[i].w)) {
        pieces.erase(pieces.begin() + static_cast<long>(i));
        if (i > 0 && i < pieces.size() &&
            pieces[i - 1].factor == pieces[i].factor) {
          pieces[i - 1].w = pieces[i - 1].w * pieces[i].w;
          pieces.erase(pieces.begin() + static_cast<long>(i));
        }
        changed = true;
        break;
      }
    }
    if (changed) continue;
    if (pieces.size() < 2) break;
    // pinch: a non-head syllable lying in the embedded edge group moves to
    // the other factor and merges with its neighbors
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      Factor f = pieces[i].factor;
      Factor other = f == Factor::A ? Factor::B : Factor::A;
      Membership m =
          piece_in_edge(factor(f), pieces[i].w, edge_image(f), bound);
      if (m.kind == Membership::Kind::Unknown) throw ReductionUnknown(bound);
      if (!m.is_member()) continue;
      pieces[i] = {other, edge_image(other).pow(m.power)};
      if (i + 1 < pieces.size() && pieces[i + 1].factor == other) {
        pieces[i].w = pieces[i].w * pieces[i + 1].w;
        pieces.erase(pieces.begin() + static_cast<long>(i) + 1);
      }
      if (i > 0 && pieces[i - 1].factor == other) {
        pieces[i - 1].w = pieces[i - 1].w * pieces[i].w;
        pieces.erase(pieces.begin() + static_cast<long>(i));
      }
      changed = true;
      break;
    }
  }
  // canonical home for a lone edge-group syllable is factor A
  if (pieces.size() == 1 && pieces[0].factor == Factor::B) {
    Membership m = piece_in_edge(d.b, pieces[0].w, edge_image(Factor::B), bound);
    if (m.is_member()) {
      pieces[0] = {Factor::A, edge_image(Factor::A).pow(m.power)};
    }
  }
  for (auto& p : pieces) p.w = factor(p.factor).normal_form(p.w);
  form.pieces = std::move(pieces);
  return form;
}

bool Splitting::is_identity_word(const Word& w, int bound) const {
  return reduce(w, bound).is_trivial();
}

Word Splitting::flatten(const SyllableForm& f) const {
  Word out;
  if (f.hnn) {
    GenId t = hnn_data().stable;
    for (std::size_t i = 0; i < f.pieces.size(); ++i) {
      if (i > 0) out = out * Word::generator(t, f.t_exps[i - 1]);
      out = out * f.pieces[i].w;
    }
  } else {
    for (const auto& p : f.pieces) out = out * p.w;
  }
  return free_reduce(out);
}

Word Splitting::normal_form_word(const Word& w, int bound) const {
  return flatten(reduce(w, bound));
}

bool Splitting::in_factor(const Word& w, Factor f, int bound) const {
  SyllableForm form = reduce(w, bound);
  if (form.hnn) return form.t_exps.empty();
  if (form.pieces.empty()) return true;
  if (form.pieces.size() > 1) return false;
  if (form.pieces[0].factor == f) return true;
  return piece_in_edge(factor(form.pieces[0].factor), form.pieces[0].w,
                       edge_image(form.pieces[0].factor), bound)
      .is_member();
}

bool Splitting::in_base_vertex_group(const Word& w, int bound) const {
  return in_factor(w, Factor::A, bound);
}

Membership Splitting::edge_membership(const Word& w, int bound) const {
  SyllableForm form = reduce(w, bound);
  if (form.hnn) {
    if (!form.t_exps.empty()) return Membership::not_member();
    return piece_in_edge(hnn_data().a, form.pieces.empty() ? Word() : form.pieces[0].w,
                         edge_image(Factor::A), bound);
  }
  if (form.pieces.empty()) return Membership::power_of(0);
  if (form.pieces.size() > 1) return Membership::not_member();
  Factor f = form.pieces[0].factor;
  return piece_in_edge(factor(f), form.pieces[0].w, edge_image(f), bound);
}

std::vector<Word> Splitting::coset_transversal(Factor f, const Word& edge_img,
                                               int len_bound,
                                               bool* complete) const {
  const Group& fg = factor(f);
  std::vector<Word> reps{Word()};
  bool saturated = false;
  auto known = [&](const Word& w) {
    for (const Word& r : reps) {
      if (cyclic_membership(fg, free_reduce(r.inverse() * w), edge_img, 64)
              .is_member()) {
        return true;
      }
    }
    return false;
  };
  for (int len = 1; len <= len_bound; ++len) {
    bool added = false;
    for_each_reduced_word(fg.alphabet(), len, [&](const Word& w) {
      if (w.length() == len && !known(w)) {
        reps.push_back(w);
        added = true;
      }
      return true;
    });
    if (!added) {
      saturated = true;
      break;
    }
  }
  if (complete) *complete = saturated;
  return reps;
}

}  // namespace treesplit
