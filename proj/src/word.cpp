#include "treesplit/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>

namespace treesplit {

namespace {

struct SymbolTable {
  std::mutex mu;
  std::map<std::string, GenId, std::less<>> by_name;
  std::vector<std::string> names;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

}  // namespace

GenId intern_generator(std::string_view name) {
  if (name.empty()) throw InputError("generator name must be nonempty");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '^' || c == '-') {
      throw InputError("invalid generator name: '" + std::string(name) + "'");
    }
  }
  SymbolTable& tab = symbols();
  std::scoped_lock lock(tab.mu);
  auto it = tab.by_name.find(name);
  if (it != tab.by_name.end()) return it->second;
  GenId id = static_cast<GenId>(tab.names.size());
  tab.names.emplace_back(name);
  tab.by_name.emplace(std::string(name), id);
  return id;
}

const std::string& generator_name(GenId id) {
  SymbolTable& tab = symbols();
  std::scoped_lock lock(tab.mu);
  return tab.names.at(id);
}

Word::Word(std::vector<Run> runs) : runs_(std::move(runs)) {
  for (const Run& r : runs_) {
    if (r.exp == 0) throw InputError("zero-exponent run in word");
  }
}

Word Word::generator(GenId g, std::int64_t exp) {
  Word w;
  if (exp != 0) w.runs_.push_back({g, exp});
  return w;
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const Run& r : runs_) n += r.exp < 0 ? -r.exp : r.exp;
  return n;
}

Word Word::inverse() const {
  Word w;
  w.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
    w.runs_.push_back({it->gen, -it->exp});
  }
  return w;
}

Word Word::concat(const Word& rhs) const {
  Word w;
  w.runs_.reserve(runs_.size() + rhs.runs_.size());
  w.runs_ = runs_;
  w.runs_.insert(w.runs_.end(), rhs.runs_.begin(), rhs.runs_.end());
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0 || runs_.empty()) return Word();
  if (runs_.size() == 1) return Word::generator(runs_[0].gen, runs_[0].exp * n);
  Word base = n < 0 ? inverse() : *this;
  std::int64_t count = n < 0 ? -n : n;
  Word out;
  out.runs_.reserve(base.runs_.size() * static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    out.runs_.insert(out.runs_.end(), base.runs_.begin(), base.runs_.end());
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Run> stack;
  stack.reserve(w.runs().size());
  for (const Run& r : w.runs()) {
    Run cur = r;
    while (cur.exp != 0 && !stack.empty() && stack.back().gen == cur.gen) {
      cur.exp += stack.back().exp;
      stack.pop_back();
    }
    if (cur.exp != 0) stack.push_back(cur);
  }
  return Word(std::move(stack));
}

bool is_freely_reduced(const Word& w) {
  const auto& runs = w.runs();
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    if (runs[i].gen == runs[i + 1].gen) return false;
  }
  return true;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word u = free_reduce(w);
  std::vector<Run> runs = u.runs();
  std::vector<Run> conj;
  while (runs.size() >= 2 && runs.front().gen == runs.back().gen &&
         (runs.front().exp > 0) != (runs.back().exp > 0)) {
    std::int64_t f = runs.front().exp;
    std::int64_t b = runs.back().exp;
    std::int64_t m = std::min(f < 0 ? -f : f, b < 0 ? -b : b);
    std::int64_t strip = f > 0 ? m : -m;
    conj.push_back({runs.front().gen, strip});
    runs.front().exp -= strip;
    runs.back().exp += strip;
    if (runs.back().exp == 0) runs.pop_back();
    if (runs.front().exp == 0) runs.erase(runs.begin());
    // front and back may now be the same mergeable run
    if (runs.size() >= 2 && runs.front().gen == runs.back().gen &&
        (runs.front().exp > 0) == (runs.back().exp > 0)) {
      break;
    }
  }
  return {Word(std::move(runs)), free_reduce(Word(std::move(conj)))};
}

namespace {

// Letter-level view of a word: pairs (gen, sign).
struct LetterIter {
  const std::vector<Run>* runs;
  std::size_t run = 0;
  std::int64_t off = 0;

  bool done() const { return run >= runs->size(); }
  std::pair<GenId, int> letter() const {
    const Run& r = (*runs)[run];
    return {r.gen, r.exp > 0 ? 1 : -1};
  }
  void next() {
    const Run& r = (*runs)[run];
    if (++off >= (r.exp < 0 ? -r.exp : r.exp)) {
      ++run;
      off = 0;
    }
  }
};

}  // namespace

int shortlex_compare(const Word& a, const Word& b) {
  std::int64_t la = a.length(), lb = b.length();
  if (la != lb) return la < lb ? -1 : 1;
  LetterIter ia{&a.runs()}, ib{&b.runs()};
  while (!ia.done()) {
    auto [ga, sa] = ia.letter();
    auto [gb, sb] = ib.letter();
    if (ga != gb) return ga < gb ? -1 : 1;
    if (sa != sb) return sa > sb ? -1 : 1;  // positive letter first
    ia.next();
    ib.next();
  }
  return 0;
}

Alphabet::Alphabet(std::vector<GenId> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i] == gens_[j]) {
        throw InputError("duplicate generator '" + generator_name(gens_[i]) +
                         "' in alphabet");
      }
    }
  }
}

bool Alphabet::contains(GenId g) const {
  return std::find(gens_.begin(), gens_.end(), g) != gens_.end();
}

bool Alphabet::contains_word(const Word& w) const {
  for (const Run& r : w.runs()) {
    if (!contains(r.gen)) return false;
  }
  return true;
}

void Alphabet::require_word(const Word& w) const {
  for (const Run& r : w.runs()) {
    if (!contains(r.gen)) {
      throw InputError("generator '" + generator_name(r.gen) +
                       "' is not in the alphabet");
    }
  }
}

std::size_t Alphabet::index_of(GenId g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) {
    throw InputError("generator '" + generator_name(g) +
                     "' is not in the alphabet");
  }
  return static_cast<std::size_t>(it - gens_.begin());
}

Alphabet Alphabet::disjoint_union(const Alphabet& a, const Alphabet& b) {
  for (GenId g : b.generators()) {
    if (a.contains(g)) {
      throw InputError("alphabets are not disjoint: '" + generator_name(g) +
                       "' occurs in both");
    }
  }
  std::vector<GenId> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Alphabet(std::move(gens));
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string_view token = text.substr(start, i - start);
    std::string_view name = token;
    std::int64_t exp = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw InputError("bad exponent in token '" + std::string(token) + "'");
      }
    }
    if (name.empty()) throw InputError("bad token '" + std::string(token) + "'");
    GenId g = intern_generator(name);
    if (!alphabet.contains(g)) {
      throw InputError("generator '" + std::string(name) +
                       "' is not in the alphabet");
    }
    if (exp != 0) runs.push_back({g, exp});
  }
  return Word(std::move(runs));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Run& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += generator_name(r.gen);
    if (r.exp != 1) {
      out += '^';
      out += std::to_string(r.exp);
    }
  }
  return out;
}

void for_each_reduced_word(const Alphabet& alphabet, int max_len,
                           const std::function<bool(const Word&)>& fn) {
  if (max_len <= 0) return;
  // depth-first; shortlex order within each length is what callers that pick
  // "first witness" rely on, so enumerate length by length
  for (int len = 1; len <= max_len; ++len) {
    // enumerate exactly the words of this length in lex order
    std::function<bool(const Word&, int)> rec = [&](const Word& prefix,
                                                    int depth) -> bool {
      for (GenId g : alphabet.generators()) {
        for (int sign : {1, -1}) {
          const auto& runs = prefix.runs();
          if (!runs.empty() && runs.back().gen == g &&
              (runs.back().exp > 0) != (sign > 0)) {
            continue;
          }
          Word next = free_reduce(prefix * Word::generator(g, sign));
          if (depth == len) {
            if (!fn(next)) return false;
          } else {
            if (!rec(next, depth + 1)) return false;
          }
        }
      }
      return true;
    };
    if (!rec(Word(), 1)) return;
  }
}

}  // namespace treesplit
