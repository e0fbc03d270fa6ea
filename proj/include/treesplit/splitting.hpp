#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "treesplit/group.hpp"

namespace treesplit {

// Raised when a pinch oracle came back Unknown; callers may retry with a
// larger membership bound.
struct ReductionUnknown : std::runtime_error {
  int bound;
  explicit ReductionUnknown(int b)
      : std::runtime_error("syllable reduction hit the membership bound (" +
                           std::to_string(b) + ")"),
        bound(b) {}
};

struct AmalgamData {
  Group a;
  Group b;
  Group c;  // edge group, cyclic or trivial
  Homomorphism emb_a;  // C -> A
  Homomorphism emb_b;  // C -> B
};

struct HnnData {
  Group a;
  Group c;
  Homomorphism emb0;  // C -> A, the t ... t^-1 side
  Homomorphism emb1;  // C -> A, image of C under conjugation by t
  GenId stable;
};

// Which factor a syllable lives in. HNN forms only use FactorA.
enum class Factor { A, B };

// Reduced syllable decomposition of a word in the split group.
// Amalgam: alternating nontrivial factor pieces; empty means identity.
// HNN: pieces[0] t^{t_exps[0]} pieces[1] ... with no Britton pinches.
struct SyllableForm {
  struct Piece {
    Factor factor;
    Word w;
  };
  std::vector<Piece> pieces;
  std::vector<int> t_exps;  // HNN only; size pieces.size()-1 (or empty)
  bool hnn = false;

  int t_length() const {
    return hnn ? static_cast<int>(t_exps.size())
               : static_cast<int>(pieces.size());
  }
  bool is_trivial() const { return pieces.empty(); }
};

// One-edge splitting of a group as an amalgamated product or HNN extension.
// Certified at construction (embeddings pass the relator check, bounded
// injectivity, disjoint alphabets). Immutable.
class Splitting : public std::enable_shared_from_this<Splitting> {
 public:
  // `edge_images` are the images of C's generators under each embedding.
  static std::shared_ptr<const Splitting> amalgam(Group a, Group b, Group c,
                                                  std::vector<Word> images_a,
                                                  std::vector<Word> images_b,
                                                  int injectivity_bound = 16);
  static std::shared_ptr<const Splitting> hnn(Group a, Group c,
                                              std::vector<Word> images0,
                                              std::vector<Word> images1,
                                              const std::string& stable_name,
                                              int injectivity_bound = 16);

  bool is_hnn() const { return std::holds_alternative<HnnData>(data_); }
  const AmalgamData& amalgam_data() const { return std::get<AmalgamData>(data_); }
  const HnnData& hnn_data() const { return std::get<HnnData>(data_); }

  // Handle for the split group itself (strategy FromSplitting).
  Group whole() const;
  const Alphabet& whole_alphabet() const { return whole_alphabet_; }

  const Group& factor(Factor f) const;
  // Edge generator as a word of the whole group (image under emb_a / emb0);
  // empty when the edge group is trivial.
  const Word& edge_generator() const { return edge_gen_whole_; }
  // Edge generator image inside a given factor.
  const Word& edge_image(Factor f) const;
  // HNN: image of the edge generator on the t^-1 ... t side (emb1).
  const Word& edge_image_conjugated() const;

  // Fully reduced syllable form. Membership bound feeds the pinch oracle;
  // throws ReductionUnknown if the oracle is exhausted.
  SyllableForm reduce(const Word& w, int bound = 64) const;

  bool is_identity_word(const Word& w, int bound = 64) const;
  Word normal_form_word(const Word& w, int bound = 64) const;
  Word flatten(const SyllableForm& f) const;

  // Membership of w in the factor subgroup of the whole group.
  bool in_factor(const Word& w, Factor f, int bound = 64) const;
  // HNN vertex group = base factor A.
  bool in_base_vertex_group(const Word& w, int bound = 64) const;

  // Membership of w in the identity-coset edge subgroup.
  Membership edge_membership(const Word& w, int bound = 64) const;

  // Shortlex coset representatives of factor/<edge image>, words of length
  // <= len_bound. complete is set when a whole length level added no coset.
  std::vector<Word> coset_transversal(Factor f, const Word& edge_img,
                                      int len_bound, bool* complete) const;

 private:
  Splitting() = default;

  std::variant<AmalgamData, HnnData> data_;
  Alphabet whole_alphabet_;
  Presentation whole_pres_;
  Word edge_gen_whole_;

  void certify(int injectivity_bound) const;
};

}  // namespace treesplit
