#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treesplit {

// Thrown on malformed word literals, unknown generators, bad config values.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interned generator symbol. Ids are global to the process; alphabets are
// subsets of the symbol table.
using GenId = std::uint32_t;

GenId intern_generator(std::string_view name);
const std::string& generator_name(GenId id);

// A run of identical letters: gen^exp with exp != 0. Words store runs so that
// huge powers (x^10000) stay O(1).
struct Run {
  GenId gen;
  std::int64_t exp;

  friend bool operator==(const Run&, const Run&) = default;
};

// Immutable free word over interned generators. May be unreduced; the empty
// word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Run> runs);

  static Word generator(GenId g, std::int64_t exp = 1);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }

  // Letter count, counting multiplicities of runs.
  std::int64_t length() const;

  Word inverse() const;
  Word concat(const Word& rhs) const;
  Word pow(std::int64_t n) const;

  // u * v is concatenation without reduction, matching free-word semantics.
  friend Word operator*(const Word& u, const Word& v) { return u.concat(v); }

  // Structural equality of run sequences (not group equality).
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Run> runs_;
};

// Unique freely reduced form; idempotent.
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

// w = conjugator * reduced * conjugator^-1 freely, with `reduced` cyclically
// reduced.
struct CyclicReduction {
  Word reduced;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

// Shortlex over (generator id asc, then positive before negative sign).
int shortlex_compare(const Word& a, const Word& b);

// Ordered set of generators making up a group's alphabet.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<GenId> gens);

  const std::vector<GenId>& generators() const { return gens_; }
  bool contains(GenId g) const;
  bool contains_word(const Word& w) const;
  // Throws InputError naming the offending generator.
  void require_word(const Word& w) const;

  // Index of g in the declared order.
  std::size_t index_of(GenId g) const;

  static Alphabet disjoint_union(const Alphabet& a, const Alphabet& b);

 private:
  std::vector<GenId> gens_;
};

// Word literal syntax: whitespace-separated tokens `name` or `name^k`
// (k a possibly negative integer). Empty string parses to the identity.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w);

// Freely reduced words over `alphabet` in shortlex order, lengths 1..max_len.
// Calls fn(word); stops early if fn returns false.
void for_each_reduced_word(const Alphabet& alphabet, int max_len,
                           const std::function<bool(const Word&)>& fn);

}  // namespace treesplit
