#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treesplit/report.hpp"
#include "treesplit/word.hpp"

namespace treesplit {

class Splitting;

struct Presentation {
  std::vector<GenId> generators;
  std::vector<Word> relators;
};

struct FreeStrategy {};
struct SurfaceStrategy {
  int genus;
};
struct FreeAbelianStrategy {
  int rank;
};
struct BaumslagSolitarStrategy {
  int p;
  int q;
};
struct FromSplittingStrategy {
  std::shared_ptr<const Splitting> splitting;
};

using Strategy = std::variant<FreeStrategy, SurfaceStrategy, FreeAbelianStrategy,
                              BaumslagSolitarStrategy, FromSplittingStrategy>;

// A finite presentation bundled with a decidable word-problem strategy.
// Cheap to copy; immutable after construction.
class Group {
 public:
  Group() = default;

  static Group free_group(const std::vector<std::string>& gen_names);
  static Group free_abelian(const std::vector<std::string>& gen_names);
  // <x, t | t x^p t^-1 = x^q>, p and q nonzero.
  static Group baumslag_solitar(int p, int q, const std::string& x = "x",
                                const std::string& t = "t");
  // Used by the surfaces module and splitting construction.
  static Group with_strategy(Presentation pres, Strategy strat);

  bool valid() const { return d_ != nullptr; }
  const Presentation& presentation() const;
  const Alphabet& alphabet() const;
  const Strategy& strategy() const;

  bool is_free() const;
  bool is_free_abelian() const;
  const BaumslagSolitarStrategy* bs() const;
  std::shared_ptr<const Splitting> from_splitting() const;

  // True iff w represents 1. Throws InputError on alphabet mismatch.
  bool is_identity(const Word& w) const;
  bool equal(const Word& u, const Word& v) const;

  // Canonical where the strategy allows it; for surface groups only the
  // guarantee "empty iff identity" holds (Dehn reduction is not confluent).
  Word normal_form(const Word& w) const;

 private:
  struct Data {
    Presentation pres;
    Alphabet alphabet;
    Strategy strat;
  };
  std::shared_ptr<const Data> d_;
};

// Three-valued membership verdict for bounded or exact cyclic-subgroup tests.
struct Membership {
  enum class Kind { Power, NotMember, Unknown };
  Kind kind = Kind::Unknown;
  std::int64_t power = 0;  // valid when kind == Power
  int bound = 0;           // the bound that was exhausted, when Unknown

  static Membership power_of(std::int64_t n) {
    return {Kind::Power, n, 0};
  }
  static Membership not_member() { return {Kind::NotMember, 0, 0}; }
  static Membership unknown(int bound) { return {Kind::Unknown, 0, bound}; }

  bool is_member() const { return kind == Kind::Power; }
};

// Decides whether w lies in <c> inside G. Exact for free and free-abelian
// strategies; otherwise a bounded search over |n| <= bound.
Membership cyclic_membership(const Group& g, const Word& w, const Word& c,
                             int bound);

// Generator-image map between groups; total on the source generators.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(Group source, Group target, std::map<GenId, Word> images);

  static Homomorphism identity(const Group& g);
  // g |-> w g w^-1 on G.
  static Homomorphism inner(const Group& g, const Word& w);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const Word& image(GenId g) const;
  const std::map<GenId, Word>& images() const { return images_; }

  // Letterwise substitution followed by free reduction.
  Word apply(const Word& w) const;

  // this∘other: first other, then this. Requires other.target == this.source
  // alphabet-wise.
  Homomorphism compose_after(const Homomorphism& other) const;

  // Verified iff every source relator maps to the identity of the target.
  CheckReport check() const;

 private:
  Group source_;
  Group target_;
  std::map<GenId, Word> images_;
};

// A certified pair (forward, backward) of mutually inverse endomorphisms.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(Homomorphism forward, Homomorphism backward);

  static Automorphism identity(const Group& g);
  static Automorphism inner(const Group& g, const Word& w);

  const Group& group() const { return forward_.source(); }
  const Homomorphism& forward() const { return forward_; }
  const Homomorphism& backward() const { return backward_; }

  Word apply(const Word& w) const { return forward_.apply(w); }
  Word apply_inverse(const Word& w) const { return backward_.apply(w); }

  Automorphism inverse() const;
  // this∘other (apply other first).
  Automorphism compose_after(const Automorphism& other) const;

  // Both directions are homomorphisms and both compositions fix the
  // generators.
  CheckReport check() const;

 private:
  Homomorphism forward_;
  Homomorphism backward_;
};

}  // namespace treesplit
