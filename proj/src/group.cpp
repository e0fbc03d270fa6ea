#include "treesplit/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "treesplit/splitting.hpp"

namespace treesplit {

namespace {

Word commutator(GenId a, GenId b) {
  return Word::generator(a) * Word::generator(b) * Word::generator(a, -1) *
         Word::generator(b, -1);
}

// ---- Dehn's algorithm for surface groups ----------------------------------
//
// Letters are encoded as gen*2 + (sign<0). The symmetrized relator set is all
// cyclic shifts of the relator and of its inverse; a reduced cyclic word is
// trivial iff it contains a subword strictly longer than half a relator.

using Letters = std::vector<std::uint64_t>;

std::uint64_t letter_code(GenId g, bool negative) {
  return (static_cast<std::uint64_t>(g) << 1) | (negative ? 1u : 0u);
}

Letters to_letters(const Word& w) {
  Letters out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (const Run& r : w.runs()) {
    std::uint64_t code = letter_code(r.gen, r.exp < 0);
    std::int64_t n = r.exp < 0 ? -r.exp : r.exp;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(code);
  }
  return out;
}

Word from_letters(const Letters& ls) {
  std::vector<Run> runs;
  for (std::uint64_t code : ls) {
    GenId g = static_cast<GenId>(code >> 1);
    std::int64_t e = (code & 1) ? -1 : 1;
    if (!runs.empty() && runs.back().gen == g) {
      runs.back().exp += e;
      if (runs.back().exp == 0) runs.pop_back();
    } else {
      runs.push_back({g, e});
    }
  }
  return Word(std::move(runs));
}

void free_reduce_letters(Letters& w) {
  Letters out;
  out.reserve(w.size());
  for (std::uint64_t code : w) {
    if (!out.empty() && (out.back() ^ 1u) == code) {
      out.pop_back();
    } else {
      out.push_back(code);
    }
  }
  w = std::move(out);
}

void cyclic_reduce_letters(Letters& w) {
  free_reduce_letters(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && (w[lo] ^ 1u) == w[hi - 1]) {
    ++lo;
    --hi;
  }
  if (lo > 0) w = Letters(w.begin() + static_cast<long>(lo),
                          w.begin() + static_cast<long>(hi));
}

struct DehnTable {
  std::vector<Letters> relators;  // symmetrized set
  std::size_t relator_len = 0;
  std::size_t threshold = 0;  // floor(len/2) + 1
};

DehnTable make_dehn_table(const Word& relator) {
  DehnTable t;
  Letters r = to_letters(free_reduce(relator));
  t.relator_len = r.size();
  t.threshold = r.size() / 2 + 1;
  Letters ri(r.rbegin(), r.rend());
  for (auto& code : ri) code ^= 1u;
  for (const Letters& base : {r, ri}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      Letters rot(base.begin() + static_cast<long>(s), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(s));
      t.relators.push_back(std::move(rot));
    }
  }
  return t;
}

// Identity-only reduction: rotations are conjugations, so triviality is
// preserved. The result is empty iff w = 1; each rewrite strictly shortens.
Letters dehn_reduce(const DehnTable& t, Letters w) {
  cyclic_reduce_letters(w);
  bool progress = true;
  while (progress && !w.empty()) {
    progress = false;
    const std::size_t n = w.size();
    for (std::size_t off = 0; off < n && !progress; ++off) {
      for (const Letters& rel : t.relators) {
        std::size_t match = 0;
        while (match < n && match < rel.size() &&
               w[(off + match) % n] == rel[match]) {
          ++match;
        }
        if (match >= t.threshold) {
          // w (rotated by off) = u v_rest with u = rel[0..match); replace u
          // by inverse(rel[match..)).
          Letters next;
          next.reserve(n);
          for (std::size_t i = rel.size(); i > match; --i) {
            next.push_back(rel[i - 1] ^ 1u);
          }
          for (std::size_t i = match; i < n; ++i) {
            next.push_back(w[(off + i) % n]);
          }
          if (next.size() >= n) {
            throw std::logic_error("dehn_reduce: rewrite did not shorten");
          }
          w = std::move(next);
          cyclic_reduce_letters(w);
          progress = true;
          break;
        }
      }
    }
  }
  return w;
}

// ---- Baumslag-Solitar Britton reduction ------------------------------------

struct BsSyllable {
  int t_sign;        // +1 or -1
  std::int64_t exp;  // x-exponent following this t-letter
};

struct BsForm {
  std::int64_t head = 0;  // leading x-exponent
  std::vector<BsSyllable> tail;

  bool trivial() const { return head == 0 && tail.empty(); }
};

BsForm bs_reduce(int p, int q, GenId x, GenId t, const Word& w) {
  BsForm f;
  auto trailing = [&]() -> std::int64_t& {
    return f.tail.empty() ? f.head : f.tail.back().exp;
  };
  auto push_t = [&](int sign) {
    f.tail.push_back({sign, 0});
    // cancel t t^-1 with trivial x in between, and pinches
    while (f.tail.size() >= 1) {
      if (f.tail.size() >= 2) {
        BsSyllable& a = f.tail[f.tail.size() - 2];
        BsSyllable& b = f.tail.back();
        std::int64_t carry = 0;
        bool pinch = false;
        if (a.t_sign == 1 && b.t_sign == -1 && a.exp % p == 0) {
          carry = (a.exp / p) * q + b.exp;
          pinch = true;
        } else if (a.t_sign == -1 && b.t_sign == 1 && a.exp % q == 0) {
          carry = (a.exp / q) * p + b.exp;
          pinch = true;
        }
        if (pinch) {
          f.tail.pop_back();
          f.tail.pop_back();
          trailing() += carry;
          continue;
        }
      }
      break;
    }
  };
  for (const Run& r : w.runs()) {
    if (r.gen == x) {
      trailing() += r.exp;
    } else if (r.gen == t) {
      int sign = r.exp < 0 ? -1 : 1;
      std::int64_t n = r.exp < 0 ? -r.exp : r.exp;
      for (std::int64_t i = 0; i < n; ++i) push_t(sign);
    } else {
      throw InputError("letter '" + generator_name(r.gen) +
                       "' is not in the Baumslag-Solitar alphabet");
    }
  }
  return f;
}

Word bs_form_to_word(GenId x, GenId t, const BsForm& f) {
  Word out = Word::generator(x, f.head);
  for (const BsSyllable& s : f.tail) {
    out = out * Word::generator(t, s.t_sign) * Word::generator(x, s.exp);
  }
  return free_reduce(out);
}

std::vector<std::int64_t> exponent_vector(const Alphabet& alpha, const Word& w) {
  std::vector<std::int64_t> v(alpha.generators().size(), 0);
  for (const Run& r : w.runs()) v[alpha.index_of(r.gen)] += r.exp;
  return v;
}

}  // namespace

Group Group::free_group(const std::vector<std::string>& gen_names) {
  Presentation p;
  for (const auto& n : gen_names) p.generators.push_back(intern_generator(n));
  return with_strategy(std::move(p), FreeStrategy{});
}

Group Group::free_abelian(const std::vector<std::string>& gen_names) {
  Presentation p;
  for (const auto& n : gen_names) p.generators.push_back(intern_generator(n));
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < p.generators.size(); ++j) {
      p.relators.push_back(commutator(p.generators[i], p.generators[j]));
    }
  }
  int rank = static_cast<int>(p.generators.size());
  return with_strategy(std::move(p), FreeAbelianStrategy{rank});
}

Group Group::baumslag_solitar(int p, int q, const std::string& x,
                              const std::string& t) {
  if (p == 0 || q == 0) throw InputError("Baumslag-Solitar p, q must be nonzero");
  Presentation pres;
  GenId gx = intern_generator(x);
  GenId gt = intern_generator(t);
  pres.generators = {gx, gt};
  pres.relators.push_back(Word::generator(gt) * Word::generator(gx, p) *
                          Word::generator(gt, -1) * Word::generator(gx, -q));
  return with_strategy(std::move(pres), BaumslagSolitarStrategy{p, q});
}

Group Group::with_strategy(Presentation pres, Strategy strat) {
  Alphabet alpha(pres.generators);
  for (const Word& r : pres.relators) alpha.require_word(r);
  if (std::holds_alternative<FreeStrategy>(strat) && !pres.relators.empty()) {
    throw InputError("free strategy requires an empty relator list");
  }
  if (const auto* s = std::get_if<SurfaceStrategy>(&strat)) {
    if (s->genus < 2) throw InputError("surface strategy requires genus >= 2");
    if (pres.relators.size() != 1 ||
        pres.relators[0].length() != 4 * s->genus) {
      throw InputError("surface strategy requires the single relator of "
                       "length 4*genus");
    }
  }
  if (const auto* s = std::get_if<FreeAbelianStrategy>(&strat)) {
    if (s->rank != static_cast<int>(pres.generators.size())) {
      throw InputError("free-abelian rank does not match generator count");
    }
  }
  auto d = std::make_shared<Data>();
  d->pres = std::move(pres);
  d->alphabet = std::move(alpha);
  d->strat = std::move(strat);
  Group g;
  g.d_ = std::move(d);
  return g;
}

const Presentation& Group::presentation() const { return d_->pres; }
const Alphabet& Group::alphabet() const { return d_->alphabet; }
const Strategy& Group::strategy() const { return d_->strat; }

bool Group::is_free() const {
  return std::holds_alternative<FreeStrategy>(d_->strat);
}
bool Group::is_free_abelian() const {
  return std::holds_alternative<FreeAbelianStrategy>(d_->strat);
}
const BaumslagSolitarStrategy* Group::bs() const {
  return std::get_if<BaumslagSolitarStrategy>(&d_->strat);
}
std::shared_ptr<const Splitting> Group::from_splitting() const {
  if (const auto* s = std::get_if<FromSplittingStrategy>(&d_->strat)) {
    return s->splitting;
  }
  return nullptr;
}

bool Group::is_identity(const Word& w) const {
  d_->alphabet.require_word(w);
  return std::visit(
      [&](const auto& strat) -> bool {
        using T = std::decay_t<decltype(strat)>;
        if constexpr (std::is_same_v<T, FreeStrategy>) {
          return free_reduce(w).empty();
        } else if constexpr (std::is_same_v<T, FreeAbelianStrategy>) {
          auto v = exponent_vector(d_->alphabet, w);
          return std::all_of(v.begin(), v.end(),
                             [](std::int64_t e) { return e == 0; });
        } else if constexpr (std::is_same_v<T, SurfaceStrategy>) {
          static thread_local std::map<std::shared_ptr<const Data>, DehnTable>
              cache;
          auto [it, inserted] = cache.try_emplace(d_);
          if (inserted) it->second = make_dehn_table(d_->pres.relators[0]);
          return dehn_reduce(it->second, to_letters(w)).empty();
        } else if constexpr (std::is_same_v<T, BaumslagSolitarStrategy>) {
          return bs_reduce(strat.p, strat.q, d_->pres.generators[0],
                           d_->pres.generators[1], w)
              .trivial();
        } else {
          return strat.splitting->is_identity_word(w);
        }
      },
      d_->strat);
}

bool Group::equal(const Word& u, const Word& v) const {
  return is_identity(u * v.inverse());
}

Word Group::normal_form(const Word& w) const {
  d_->alphabet.require_word(w);
  return std::visit(
      [&](const auto& strat) -> Word {
        using T = std::decay_t<decltype(strat)>;
        if constexpr (std::is_same_v<T, FreeStrategy>) {
          return free_reduce(w);
        } else if constexpr (std::is_same_v<T, FreeAbelianStrategy>) {
          auto v = exponent_vector(d_->alphabet, w);
          Word out;
          for (std::size_t i = 0; i < v.size(); ++i) {
            out = out * Word::generator(d_->pres.generators[i], v[i]);
          }
          return free_reduce(out);
        } else if constexpr (std::is_same_v<T, SurfaceStrategy>) {
          static thread_local std::map<std::shared_ptr<const Data>, DehnTable>
              cache;
          auto [it, inserted] = cache.try_emplace(d_);
          if (inserted) it->second = make_dehn_table(d_->pres.relators[0]);
          return from_letters(dehn_reduce(it->second, to_letters(w)));
        } else if constexpr (std::is_same_v<T, BaumslagSolitarStrategy>) {
          GenId x = d_->pres.generators[0], t = d_->pres.generators[1];
          return bs_form_to_word(x, t, bs_reduce(strat.p, strat.q, x, t, w));
        } else {
          return strat.splitting->normal_form_word(w);
        }
      },
      d_->strat);
}

Membership cyclic_membership(const Group& g, const Word& w, const Word& c,
                             int bound) {
  g.alphabet().require_word(w);
  g.alphabet().require_word(c);
  if (g.is_identity(c)) {
    return g.is_identity(w) ? Membership::power_of(0) : Membership::not_member();
  }
  if (g.is_free()) {
    // exact root extraction: c = d u d^-1 with u cyclically reduced, then
    // w in <c> iff d^-1 w d is a literal power of u
    CyclicReduction cr = cyclic_reduce(free_reduce(c));
    Word conj = cr.conjugator;
    Word target = free_reduce(conj.inverse() * free_reduce(w) * conj);
    if (target.empty()) return Membership::power_of(0);
    std::int64_t lu = cr.reduced.length();
    std::int64_t lw = target.length();
    if (lu == 0 || lw % lu != 0) return Membership::not_member();
    std::int64_t n = lw / lu;
    if (free_reduce(cr.reduced.pow(n)) == target) return Membership::power_of(n);
    if (free_reduce(cr.reduced.pow(-n)) == target)
      return Membership::power_of(-n);
    return Membership::not_member();
  }
  if (g.is_free_abelian()) {
    const auto& gens = g.presentation().generators;
    Alphabet alpha(gens);
    std::vector<std::int64_t> vw(gens.size(), 0), vc(gens.size(), 0);
    for (const Run& r : w.runs()) vw[alpha.index_of(r.gen)] += r.exp;
    for (const Run& r : c.runs()) vc[alpha.index_of(r.gen)] += r.exp;
    std::optional<std::int64_t> n;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (vc[i] == 0) {
        if (vw[i] != 0) return Membership::not_member();
        continue;
      }
      if (vw[i] % vc[i] != 0) return Membership::not_member();
      std::int64_t ni = vw[i] / vc[i];
      if (n && *n != ni) return Membership::not_member();
      n = ni;
    }
    return Membership::power_of(n.value_or(0));
  }
  // bounded search
  for (int n = 0; n <= bound; ++n) {
    for (int sign : {1, -1}) {
      if (n == 0 && sign < 0) continue;
      std::int64_t k = static_cast<std::int64_t>(n) * sign;
      if (g.is_identity(w * c.pow(-k))) return Membership::power_of(k);
    }
  }
  return Membership::unknown(bound);
}

Homomorphism::Homomorphism(Group source, Group target,
                           std::map<GenId, Word> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  for (GenId g : source_.presentation().generators) {
    auto it = images_.find(g);
    if (it == images_.end()) {
      throw InputError("homomorphism missing image for generator '" +
                       generator_name(g) + "'");
    }
    target_.alphabet().require_word(it->second);
  }
}

Homomorphism Homomorphism::identity(const Group& g) {
  std::map<GenId, Word> images;
  for (GenId gen : g.presentation().generators) {
    images[gen] = Word::generator(gen);
  }
  return Homomorphism(g, g, std::move(images));
}

Homomorphism Homomorphism::inner(const Group& g, const Word& w) {
  std::map<GenId, Word> images;
  for (GenId gen : g.presentation().generators) {
    images[gen] = free_reduce(w * Word::generator(gen) * w.inverse());
  }
  return Homomorphism(g, g, std::move(images));
}

const Word& Homomorphism::image(GenId g) const {
  auto it = images_.find(g);
  if (it == images_.end()) {
    throw InputError("no image for generator '" + generator_name(g) + "'");
  }
  return it->second;
}

Word Homomorphism::apply(const Word& w) const {
  Word out;
  for (const Run& r : w.runs()) {
    out = out * image(r.gen).pow(r.exp);
  }
  return free_reduce(out);
}

Homomorphism Homomorphism::compose_after(const Homomorphism& other) const {
  std::map<GenId, Word> images;
  for (const auto& [g, img] : other.images_) {
    images[g] = apply(img);
  }
  return Homomorphism(other.source_, target_, std::move(images));
}

CheckReport Homomorphism::check() const {
  CheckReport report;
  report.name = "homomorphism";
  for (const Word& r : source_.presentation().relators) {
    if (!target_.is_identity(apply(r))) {
      report.verdict = Verdict::ViolationWitness;
      report.witness = "relator " + format_word(r);
      return report;
    }
  }
  report.verdict = Verdict::Verified;
  return report;
}

Automorphism::Automorphism(Homomorphism forward, Homomorphism backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {}

Automorphism Automorphism::identity(const Group& g) {
  return Automorphism(Homomorphism::identity(g), Homomorphism::identity(g));
}

Automorphism Automorphism::inner(const Group& g, const Word& w) {
  return Automorphism(Homomorphism::inner(g, w),
                      Homomorphism::inner(g, free_reduce(w.inverse())));
}

Automorphism Automorphism::inverse() const {
  return Automorphism(backward_, forward_);
}

Automorphism Automorphism::compose_after(const Automorphism& other) const {
  return Automorphism(forward_.compose_after(other.forward_),
                      other.backward_.compose_after(backward_));
}

CheckReport Automorphism::check() const {
  CheckReport report;
  report.name = "automorphism";
  for (const Homomorphism* h : {&forward_, &backward_}) {
    CheckReport sub = h->check();
    if (sub.verdict == Verdict::ViolationWitness) {
      sub.name = report.name;
      return sub;
    }
  }
  const Group& g = group();
  for (GenId gen : g.presentation().generators) {
    Word v = Word::generator(gen);
    if (!g.is_identity(v.inverse() * backward_.apply(forward_.apply(v))) ||
        !g.is_identity(v.inverse() * forward_.apply(backward_.apply(v)))) {
      report.verdict = Verdict::ViolationWitness;
      report.witness = generator_name(gen);
      return report;
    }
  }
  report.verdict = Verdict::Verified;
  return report;
}

}  // namespace treesplit
