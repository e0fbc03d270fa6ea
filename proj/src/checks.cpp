#include "treesplit/checks.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace treesplit {

namespace {

// shortest freely reduced word of the factor outside <img>, exact membership
std::optional<Word> outside_cyclic(const Group& fg, const Word& img,
                                   int bound) {
  std::optional<Word> found;
  for_each_reduced_word(fg.alphabet(), bound, [&](const Word& w) {
    if (cyclic_membership(fg, w, img, 64).kind ==
        Membership::Kind::NotMember) {
      found = w;
      return false;
    }
    return true;
  });
  return found;
}

std::string vertex_label(const Splitting& s, const TreeVertex& v) {
  std::string orbit = s.is_hnn() ? "V" : (v.orbit == Factor::A ? "VA" : "VB");
  return orbit + "(" + format_word(v.rep) + ")";
}

}  // namespace

CheckReport check_c1(const Splitting& s, int bound) {
  CheckReport report;
  report.name = "c1";
  report.bounds = "word_bound=" + std::to_string(bound);

  std::optional<Word> w1, w2;
  std::string label1 = "A", label2 = "B";
  if (s.is_hnn()) {
    label2 = "t^-1 A t";
    const HnnData& d = s.hnn_data();
    w1 = outside_cyclic(d.a, s.edge_image(Factor::A), bound);
    // an element of t^-1 A t outside C corresponds to w in A outside the
    // emb1 image: t^-1 w t in <emb0(c)> iff w in <emb1(c)>
    std::optional<Word> w = outside_cyclic(d.a, s.edge_image_conjugated(), bound);
    if (w) {
      Word t = Word::generator(d.stable);
      w2 = free_reduce(t.inverse() * *w * t);
    }
  } else {
    w1 = outside_cyclic(s.factor(Factor::A), s.edge_image(Factor::A), bound);
    w2 = outside_cyclic(s.factor(Factor::B), s.edge_image(Factor::B), bound);
  }

  if (w1 && w2) {
    report.verdict = Verdict::Verified;
    report.witness = label1 + ": " + format_word(*w1) + "; " + label2 + ": " +
                     format_word(*w2);
    report.note = "edge subgroup proper in both vertex groups";
  } else {
    report.verdict = Verdict::NoViolationUpTo;
    report.note = std::string("no witness found for endpoint ") +
                  (w1 ? label2 : label1);
  }
  return report;
}

CheckReport check_c2(const Splitting& s, const TreeVertex& vertex,
                     int conj_bound, int power_bound) {
  CheckReport report;
  report.name = "c2";
  report.bounds = "conj_bound=" + std::to_string(conj_bound) +
                  " power_bound=" + std::to_string(power_bound);

  const Word& c = s.edge_generator();
  if (c.empty()) {
    report.verdict = Verdict::NoViolationUpTo;
    report.note = "trivial edge group: containment implies equality";
    return report;
  }
  Group whole = s.whole();

  struct Stab {
    Word conj;
    Word gen;  // conj * c * conj^-1
  };
  std::vector<Stab> stabs;
  auto add = [&](Word conj) {
    conj = free_reduce(conj);
    Word gen = free_reduce(conj * c * conj.inverse());
    for (const Stab& st : stabs) {
      // same cyclic subgroup when the generators agree up to inverse
      if (whole.is_identity(free_reduce(gen * st.gen.inverse())) ||
          whole.is_identity(free_reduce(gen * st.gen))) {
        return;
      }
    }
    stabs.push_back({std::move(conj), std::move(gen)});
  };

  bool complete = false;
  if (s.is_hnn()) {
    GenId t = s.hnn_data().stable;
    for (const Word& a : s.coset_transversal(Factor::A, s.edge_image(Factor::A),
                                             conj_bound, &complete)) {
      add(vertex.rep * a);
    }
    for (const Word& a : s.coset_transversal(
             Factor::A, s.edge_image_conjugated(), conj_bound, &complete)) {
      add(vertex.rep * a * Word::generator(t));
    }
  } else {
    for (const Word& a : s.coset_transversal(
             vertex.orbit, s.edge_image(vertex.orbit), conj_bound, &complete)) {
      add(vertex.rep * a);
    }
  }

  // u in <v>, nonzero powers only
  auto power_in = [&](const Word& u, const Word& v) -> std::optional<std::int64_t> {
    for (int n = 1; n <= power_bound; ++n) {
      for (int sign : {1, -1}) {
        std::int64_t k = static_cast<std::int64_t>(n) * sign;
        if (whole.is_identity(free_reduce(v.pow(k) * u.inverse()))) return k;
      }
    }
    return std::nullopt;
  };

  for (std::size_t i = 0; i < stabs.size(); ++i) {
    for (std::size_t j = 0; j < stabs.size(); ++j) {
      if (i == j) continue;
      auto n = power_in(stabs[i].gen, stabs[j].gen);
      if (!n || *n == 1 || *n == -1) continue;
      if (!power_in(stabs[j].gen, stabs[i].gen)) {
        report.verdict = Verdict::ViolationWitness;
        report.witness = "<" + format_word(stabs[i].gen) + "> proper in <" +
                         format_word(stabs[j].gen) + "> (exponent " +
                         std::to_string(*n) + ")";
        return report;
      }
    }
  }
  report.verdict = Verdict::NoViolationUpTo;
  report.note = "no strict containment among " + std::to_string(stabs.size()) +
                " incident stabilizers";
  return report;
}

CheckReport check_faithful_words(const Splitting& s,
                                 const std::vector<Word>& words,
                                 int ball_radius, int transversal_bound,
                                 Exec exec) {
  CheckReport report;
  report.name = "faithful";
  report.bounds = "words=" + std::to_string(words.size()) +
                  " radius=" + std::to_string(ball_radius) +
                  " transversal_bound=" + std::to_string(transversal_bound);

  TreeVertex base{Factor::A, Word()};
  TreeBall ball = expand_ball(s, base, ball_radius, transversal_bound);
  const std::size_t nv = ball.size();

  // moved-object index per word: [0, nv) vertex, [nv, 2nv) parent edge
  // (index 0 doubles as the base edge), -1 when nothing in the ball moved
  std::vector<long long> hit(words.size(), -1);
  parallel_for(words.size(), exec, [&](std::size_t wi) {
    const Word& g = words[wi];
    for (std::size_t i = 0; i < nv; ++i) {
      if (!vertex_equal(s, act(s, g, ball.vertices[i]), ball.vertices[i])) {
        hit[wi] = static_cast<long long>(i);
        return;
      }
    }
    for (std::size_t i = 0; i < nv; ++i) {
      const TreeEdge& e = ball.parent_edge[i];
      if (!edge_equal(s, act(s, g, e), e)) {
        hit[wi] = static_cast<long long>(nv + i);
        return;
      }
    }
  });

  std::vector<std::string> lines;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    if (hit[wi] < 0) {
      report.verdict = Verdict::ViolationWitness;
      report.witness = "g=" + format_word(words[wi]) +
                       " fixes every vertex and edge of the ball";
      return report;
    }
    // replay the witness through the action
    auto h = static_cast<std::size_t>(hit[wi]);
    std::string what;
    if (h < nv) {
      const TreeVertex& v = ball.vertices[h];
      if (vertex_equal(s, act(s, words[wi], v), v)) {
        throw std::logic_error("faithfulness witness failed replay");
      }
      what = "vertex " + vertex_label(s, v);
    } else {
      const TreeEdge& e = ball.parent_edge[h - nv];
      if (edge_equal(s, act(s, words[wi], e), e)) {
        throw std::logic_error("faithfulness witness failed replay");
      }
      what = "edge E(" + format_word(e.rep) + ")";
    }
    lines.push_back("g=" + format_word(words[wi]) + " moves " + what);
  }

  report.verdict = Verdict::NoViolationUpTo;
  if (lines.size() <= 12) {
    std::string joined;
    for (const std::string& l : lines) {
      if (!joined.empty()) joined += "; ";
      joined += l;
    }
    report.witness = joined;
  } else if (!lines.empty()) {
    report.witness = lines.front();
    report.note = "all " + std::to_string(lines.size()) +
                  " words moved a vertex or edge (witnesses replayed)";
  }
  return report;
}

CheckReport check_faithful(const Splitting& s, int word_bound, int ball_radius,
                           int transversal_bound, Exec exec) {
  std::vector<Word> words;
  for_each_reduced_word(s.whole_alphabet(), word_bound, [&](const Word& w) {
    if (!s.is_identity_word(w)) words.push_back(w);
    return true;
  });
  CheckReport report =
      check_faithful_words(s, words, ball_radius, transversal_bound, exec);
  report.bounds = "word_bound=" + std::to_string(word_bound) + " " +
                  report.bounds;
  return report;
}

CheckReport check_minimal_and_not_line(const Splitting& s, int radius,
                                       int transversal_bound) {
  CheckReport report;
  report.name = "minimal_and_not_line";
  report.bounds = "radius=" + std::to_string(radius) +
                  " transversal_bound=" + std::to_string(transversal_bound);

  TreeVertex base{Factor::A, Word()};
  TreeBall ball = expand_ball(s, base, radius, transversal_bound);

  std::vector<int> deg(ball.size(), 0);
  for (std::size_t i = 1; i < ball.size(); ++i) {
    deg[i] += 1;
    deg[static_cast<std::size_t>(ball.parent[i])] += 1;
  }
  std::optional<std::size_t> branch;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (ball.depth[i] < radius && deg[i] >= 3) {
      branch = i;
      break;
    }
  }

  // minimality evidence: every ball vertex on a geodesic between two points
  // of the orbit of the base vertex (the base itself and a translate)
  std::vector<char> covered(ball.size(), 0);
  covered[0] = 1;
  std::size_t remaining = ball.size() - 1;
  int max_len = std::max(radius + 1, radius * (transversal_bound + 1));
  for_each_reduced_word(s.whole_alphabet(), max_len, [&](const Word& g) {
    Geodesic geo = distance_geodesic(s, base, act(s, g, base));
    for (const TreeVertex& pv : geo.path) {
      auto idx = find_vertex(s, ball, pv);
      if (idx && !covered[*idx]) {
        covered[*idx] = 1;
        --remaining;
      }
    }
    return remaining > 0;
  });

  if (!branch) {
    report.verdict = Verdict::NoViolationUpTo;
    report.note = "no vertex of degree >= 3 found within the ball";
    return report;
  }
  report.witness = "degree=" + std::to_string(deg[*branch]) + " at " +
                   vertex_label(s, ball.vertices[*branch]);
  if (remaining == 0) {
    report.verdict = Verdict::Verified;  // the not-line witness is exact
    report.note = "minimality: all " + std::to_string(ball.size()) +
                  " ball vertices lie on geodesics between orbit points "
                  "(translates up to length " +
                  std::to_string(max_len) + ")";
  } else {
    report.verdict = Verdict::NoViolationUpTo;
    report.note = "minimality search incomplete: " +
                  std::to_string(remaining) + " ball vertices uncovered";
  }
  return report;
}

CheckReport check_lambda_membership(const Splitting& s, const Automorphism& phi,
                                    int bound, int membership_bound) {
  CheckReport report;
  report.name = "lambda_membership";
  report.bounds = "witness_bound=" + std::to_string(bound) +
                  " membership_bound=" + std::to_string(membership_bound);

  auto search = [&](auto&& pred) -> std::optional<Word> {
    if (pred(Word())) return Word();
    std::optional<Word> found;
    for_each_reduced_word(s.whole_alphabet(), bound, [&](const Word& w) {
      if (pred(w)) {
        found = w;
        return false;
      }
      return true;
    });
    return found;
  };

  auto x = search([&](const Word& w) {
    return witness::vertex1(s, phi, w, membership_bound);
  });
  auto y = search([&](const Word& w) {
    return witness::vertex2(s, phi, w, membership_bound);
  });
  auto z = search([&](const Word& w) {
    return witness::edge(s, phi, w, membership_bound);
  });
  std::optional<ExtendedIsometry> common = find_witness(s, phi, bound);

  if (x && y && z) {
    report.verdict = Verdict::Verified;
    report.witness = "x=" + format_word(*x) + " y=" + format_word(*y) +
                     " z=" + format_word(*z);
    report.note = common ? "common witness " + format_word(common->witness) +
                               ": extends to a tree isometry"
                         : "no common witness up to bound";
  } else {
    report.verdict = Verdict::NoViolationUpTo;
    std::string missing;
    if (!x) missing += " v1";
    if (!y) missing += " v2";
    if (!z) missing += " edge";
    report.note = "no witness up to bound for:" + missing;
  }
  return report;
}

CheckReport bs_suite(int p, int q, int k_max) {
  if (p <= 1 || q <= 1) throw InputError("bs_suite requires p, q > 1");
  CheckReport report;
  report.name = "bs_suite";
  report.bounds = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                  " k_max=" + std::to_string(k_max);

  Group g = Group::baumslag_solitar(p, q);
  GenId x = g.presentation().generators[0];
  GenId t = g.presentation().generators[1];

  std::int64_t pk = 1, qk = 1;
  for (int k = 1; k <= k_max; ++k) {
    pk *= p;
    qk *= q;
    Word w = Word::generator(t, k) * Word::generator(x, k * pk) *
             Word::generator(t, -k) * Word::generator(x, -k * qk);
    if (!g.is_identity(w)) {
      report.verdict = Verdict::ViolationWitness;
      report.witness = "k=" + std::to_string(k);
      return report;
    }
  }
  for (int n = 1; n <= k_max; ++n) {
    Word w = Word::generator(t) * Word::generator(x, std::int64_t{1} * n * p) *
             Word::generator(t, -1) * Word::generator(x, std::int64_t{-1} * n * q);
    if (!g.is_identity(w)) {
      report.verdict = Verdict::ViolationWitness;
      report.witness = "scaled relation n=" + std::to_string(n);
      return report;
    }
  }
  report.verdict = Verdict::Verified;
  report.note = "t^k x^{k p^k} t^-k = x^{k q^k} for k <= " +
                std::to_string(k_max) + "; t x^{np} t^-1 = x^{nq} for n <= " +
                std::to_string(k_max);
  return report;
}

CheckReport solver_agreement(const Splitting& s, const Group& reference,
                             int exhaustive_len, int random_count,
                             int random_len, std::uint64_t seed, Exec exec) {
  CheckReport report;
  report.name = "solver_agreement";
  report.bounds = "exhaustive_len=" + std::to_string(exhaustive_len) +
                  " random_count=" + std::to_string(random_count) +
                  " random_len=" + std::to_string(random_len) +
                  " seed=" + std::to_string(seed);

  const Alphabet& alpha = s.whole_alphabet();
  auto agree = [&](const Word& w) {
    return s.is_identity_word(w) == reference.is_identity(w);
  };

  if (!agree(Word())) {
    report.verdict = Verdict::ViolationWitness;
    report.witness = "empty word";
    return report;
  }

  // partition the exhaustive range by its reduced prefixes of length <= 2 so
  // the work is a flat indexable grid
  const int stem_len = std::min(2, exhaustive_len);
  std::vector<Word> stems;
  for_each_reduced_word(alpha, stem_len,
                        [&](const Word& w) {
                          stems.push_back(w);
                          return true;
                        });

  std::vector<std::string> mismatch(stems.size());
  std::vector<long long> counts(stems.size(), 0);
  const auto& gens = alpha.generators();
  parallel_for(stems.size(), exec, [&](std::size_t i) {
    const Word& stem = stems[i];
    long long n = 0;
    std::string bad;
    auto test = [&](const Word& w) {
      ++n;
      if (bad.empty() && !agree(w)) bad = format_word(w);
    };
    test(stem);
    if (static_cast<int>(stem.length()) == stem_len &&
        stem_len < exhaustive_len) {
      const Run last = stem.runs().back();
      std::function<void(const Word&, GenId, int)> rec =
          [&](const Word& w, GenId lg, int ls) {
            if (w.length() >= exhaustive_len) return;
            for (GenId gg : gens) {
              for (int sign : {1, -1}) {
                if (gg == lg && sign == -ls) continue;  // keep it reduced
                Word next = w * Word::generator(gg, sign);
                test(next);
                rec(next, gg, sign);
              }
            }
          };
      rec(stem, last.gen, last.exp < 0 ? -1 : 1);
    }
    counts[i] = n;
    mismatch[i] = bad;
  });

  long long exhaustive_total = 1;  // the empty word
  for (std::size_t i = 0; i < stems.size(); ++i) {
    exhaustive_total += counts[i];
    if (!mismatch[i].empty()) {
      report.verdict = Verdict::ViolationWitness;
      report.witness = mismatch[i];
      return report;
    }
  }

  std::vector<Word> sample =
      sample_reduced_words(alpha, random_count, random_len, seed);
  std::vector<std::uint8_t> ok(sample.size(), 1);
  parallel_for(sample.size(), exec, [&](std::size_t i) {
    if (!agree(sample[i])) ok[i] = 0;
  });
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!ok[i]) {
      report.verdict = Verdict::ViolationWitness;
      report.witness = format_word(sample[i]);
      return report;
    }
  }

  report.verdict = Verdict::Verified;
  report.note = "agreement on " + std::to_string(exhaustive_total) +
                " exhaustive and " + std::to_string(sample.size()) +
                " random words";
  return report;
}

std::vector<Word> sample_reduced_words(const Alphabet& alphabet, int count,
                                       int max_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& gens = alphabet.generators();
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, gens.size() * 2 - 1);
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    int len = len_dist(rng);
    Word w;
    GenId last = 0;
    int last_sign = 0;
    for (int j = 0; j < len; ++j) {
      while (true) {
        std::size_t k = letter(rng);
        GenId g = gens[k / 2];
        int sign = k % 2 == 0 ? 1 : -1;
        if (j > 0 && g == last && sign == -last_sign) continue;
        w = w * Word::generator(g, sign);
        last = g;
        last_sign = sign;
        break;
      }
    }
    // no cancellations by construction; this only merges adjacent runs
    out.push_back(free_reduce(w));
  }
  return out;
}

}  // namespace treesplit
