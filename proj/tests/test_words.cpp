#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "treesplit/word.hpp"

using namespace treesplit;

namespace {

Alphabet two_letters() {
  return Alphabet({intern_generator("a"), intern_generator("b")});
}

// independent oracle: expand to single letters and cancel on a stack
Word naive_reduce(const Word& w) {
  std::vector<std::pair<GenId, int>> stack;
  for (const Run& r : w.runs()) {
    int sign = r.exp < 0 ? -1 : 1;
    for (std::int64_t i = 0; i < (r.exp < 0 ? -r.exp : r.exp); ++i) {
      if (!stack.empty() && stack.back().first == r.gen &&
          stack.back().second == -sign) {
        stack.pop_back();
      } else {
        stack.emplace_back(r.gen, sign);
      }
    }
  }
  std::vector<Run> runs;
  for (auto [g, s] : stack) {
    if (!runs.empty() && runs.back().gen == g &&
        (runs.back().exp > 0) == (s > 0)) {
      runs.back().exp += s;
    } else {
      runs.push_back({g, s});
    }
  }
  return Word(std::move(runs));
}

Word random_word(std::mt19937_64& rng, const std::vector<GenId>& gens,
                 int len) {
  Word w;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() * 2 - 1);
  for (int i = 0; i < len; ++i) {
    std::size_t k = pick(rng);
    w = w * Word::generator(gens[k / 2], k % 2 == 0 ? 1 : -1);
  }
  return w;
}

}  // namespace

TEST_CASE("parse and format round trip") {
  Alphabet alpha = two_letters();
  CHECK(format_word(parse_word("a b^-2 a^3", alpha)) == "a b^-2 a^3");
  CHECK(format_word(parse_word("", alpha)) == "1");
  CHECK(format_word(free_reduce(parse_word("  a   a  ", alpha))) == "a^2");
  CHECK(parse_word("a^0", alpha).empty());
  CHECK_THROWS_AS(parse_word("z", alpha), InputError);
  CHECK_THROWS_AS(parse_word("a^x", alpha), InputError);
  CHECK_THROWS_AS(parse_word("a^", alpha), InputError);
}

TEST_CASE("free reduction matches the letterwise oracle") {
  Alphabet alpha = two_letters();
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_word(rng, alpha.generators(), 1 + trial % 20);
    Word fast = free_reduce(w);
    CHECK(fast == naive_reduce(w));
    CHECK(is_freely_reduced(fast));
    CHECK(free_reduce(fast) == fast);  // idempotent
  }
}

TEST_CASE("group identities of the free word algebra") {
  Alphabet alpha = two_letters();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_word(rng, alpha.generators(), 1 + trial % 8);
    Word v = random_word(rng, alpha.generators(), 1 + (trial * 7) % 8);
    CHECK(free_reduce(u * u.inverse()).empty());
    CHECK(free_reduce(u.inverse() * u).empty());
    CHECK(free_reduce((u * v).inverse() * (u * v)).empty());
    CHECK(free_reduce(u.pow(3)) == free_reduce(u * u * u));
    CHECK(free_reduce(u.pow(-2)) == free_reduce(u.inverse() * u.inverse()));
  }
}

TEST_CASE("run-length words keep huge powers cheap") {
  GenId x = intern_generator("a");
  Word big = Word::generator(x, 1'000'000'000'000LL);
  CHECK(big.length() == 1'000'000'000'000LL);
  CHECK(big.runs().size() == 1);
  CHECK(free_reduce(big * big.inverse()).empty());
  CHECK(free_reduce(big.pow(3)).length() == 3'000'000'000'000LL);
}

TEST_CASE("cyclic reduction splits off the conjugator") {
  Alphabet alpha = two_letters();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = free_reduce(random_word(rng, alpha.generators(), 1 + trial % 12));
    CyclicReduction cr = cyclic_reduce(w);
    CHECK(free_reduce(cr.conjugator * cr.reduced * cr.conjugator.inverse()) ==
          w);
    if (!cr.reduced.empty()) {
      // cyclically reduced: squaring does not cancel across the seam
      CHECK(free_reduce(cr.reduced * cr.reduced).length() ==
            2 * cr.reduced.length());
    }
  }
}

TEST_CASE("shortlex enumeration is complete, reduced, and ordered") {
  Alphabet alpha = two_letters();
  std::vector<Word> seen;
  for_each_reduced_word(alpha, 3, [&](const Word& w) {
    seen.push_back(w);
    return true;
  });
  // 4 + 4*3 + 4*3*3 freely reduced words
  CHECK(seen.size() == 4 + 12 + 36);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    CHECK(is_freely_reduced(seen[i]));
    CHECK(seen[i].length() <= 3);
    if (i > 0) CHECK(shortlex_compare(seen[i - 1], seen[i]) < 0);
  }
  // early stop
  int count = 0;
  for_each_reduced_word(alpha, 3, [&](const Word&) { return ++count < 5; });
  CHECK(count == 5);
}

TEST_CASE("alphabet membership and disjoint union") {
  Alphabet alpha = two_letters();
  Alphabet other({intern_generator("c")});
  Alphabet both = Alphabet::disjoint_union(alpha, other);
  CHECK(both.generators().size() == 3);
  CHECK_THROWS_AS(Alphabet::disjoint_union(alpha, alpha), InputError);
  Word w = parse_word("a c", both);
  CHECK_THROWS_AS(alpha.require_word(w), InputError);
  CHECK(both.contains_word(w));
  CHECK(both.index_of(intern_generator("c")) == 2);
}
