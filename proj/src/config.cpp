#include "treesplit/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace treesplit {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct RawSection {
  std::string kind;
  std::string name;
  int line = 0;
  std::map<std::string, std::pair<int, std::string>> kv;  // key -> line, value

  const std::string* find(const std::string& key) const {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second.second;
  }
  int key_line(const std::string& key) const {
    auto it = kv.find(key);
    return it == kv.end() ? line : it->second.first;
  }
  std::string require(const std::string& key) const {
    const std::string* v = find(key);
    if (!v) {
      throw ConfigError(line, "[" + kind + " " + name + "] is missing key '" +
                                  key + "'");
    }
    return *v;
  }
  std::string get_or(const std::string& key, const std::string& dflt) const {
    const std::string* v = find(key);
    return v ? *v : dflt;
  }
};

long long to_ll(const RawSection& s, const std::string& key,
                const std::string& value) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(s.key_line(key),
                      "key '" + key + "' expects an integer, got '" + value +
                          "'");
  }
}

int positive_int(const RawSection& s, const std::string& key,
                 const std::string& value) {
  long long v = to_ll(s, key, value);
  if (v <= 0 || v > 1'000'000) {
    throw ConfigError(s.key_line(key), "key '" + key + "' must be positive");
  }
  return static_cast<int>(v);
}

void check_keys(const RawSection& s, const std::set<std::string>& allowed,
                bool allow_image_maps = false) {
  for (const auto& [key, entry] : s.kv) {
    if (allowed.count(key)) continue;
    if (allow_image_maps && (key.rfind("image.", 0) == 0 ||
                             key.rfind("inverse.", 0) == 0)) {
      continue;
    }
    throw ConfigError(entry.first, "unknown key '" + key + "' in [" + s.kind +
                                       " " + s.name + "]");
  }
}

CurveSpec parse_curve(const RawSection& s, const std::string& value) {
  if (value == "nonseparating") return CurveSpec::nonseparating();
  if (value.rfind("separating:", 0) == 0) {
    return CurveSpec::separating(
        static_cast<int>(to_ll(s, "curve", value.substr(11))));
  }
  throw ConfigError(s.key_line("curve"),
                    "curve must be 'nonseparating' or 'separating:<h>'");
}

Word parse_word_at(const RawSection& s, const std::string& key,
                   const std::string& text, const Alphabet& alphabet) {
  try {
    return parse_word(text, alphabet);
  } catch (const InputError& e) {
    throw ConfigError(s.key_line(key), std::string(e.what()));
  }
}

Group build_group(const RawSection& s) {
  std::string type = s.require("type");
  try {
    if (type == "free" || type == "free_abelian") {
      check_keys(s, {"type", "generators"});
      std::vector<std::string> names = split_ws(s.require("generators"));
      return type == "free" ? Group::free_group(names)
                            : Group::free_abelian(names);
    }
    if (type == "bs") {
      check_keys(s, {"type", "p", "q", "x", "t"});
      return Group::baumslag_solitar(
          static_cast<int>(to_ll(s, "p", s.require("p"))),
          static_cast<int>(to_ll(s, "q", s.require("q"))), s.get_or("x", "x"),
          s.get_or("t", "t"));
    }
    if (type == "surface") {
      check_keys(s, {"type", "genus"});
      return surface_group(positive_int(s, "genus", s.require("genus")));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InputError& e) {
    throw ConfigError(s.line, std::string(e.what()));
  }
  throw ConfigError(s.key_line("type"), "unknown group type '" + type + "'");
}

std::shared_ptr<const Splitting> build_splitting(
    const RawSection& s, const std::map<std::string, Group>& groups) {
  auto group_ref = [&](const std::string& key) -> const Group& {
    std::string name = s.require(key);
    auto it = groups.find(name);
    if (it == groups.end()) {
      throw ConfigError(s.key_line(key), "undefined group '" + name + "'");
    }
    return it->second;
  };
  std::string type = s.require("type");
  try {
    if (type == "amalgam") {
      check_keys(s, {"type", "a", "b", "edge", "emb_a", "emb_b"});
      const Group& a = group_ref("a");
      const Group& b = group_ref("b");
      Group c = s.find("edge") ? group_ref("edge") : Group::free_group({});
      std::vector<Word> ia, ib;
      if (!c.presentation().generators.empty()) {
        ia.push_back(parse_word_at(s, "emb_a", s.require("emb_a"), a.alphabet()));
        ib.push_back(parse_word_at(s, "emb_b", s.require("emb_b"), b.alphabet()));
      }
      return Splitting::amalgam(a, b, c, std::move(ia), std::move(ib));
    }
    if (type == "hnn") {
      check_keys(s, {"type", "a", "edge", "emb0", "emb1", "stable"});
      const Group& a = group_ref("a");
      Group c = s.find("edge") ? group_ref("edge") : Group::free_group({});
      std::vector<Word> i0, i1;
      if (!c.presentation().generators.empty()) {
        i0.push_back(parse_word_at(s, "emb0", s.require("emb0"), a.alphabet()));
        i1.push_back(parse_word_at(s, "emb1", s.require("emb1"), a.alphabet()));
      }
      return Splitting::hnn(a, c, std::move(i0), std::move(i1),
                            s.require("stable"));
    }
    if (type == "surface") {
      check_keys(s, {"type", "genus", "curve"});
      int genus = positive_int(s, "genus", s.require("genus"));
      return split_along_curve(genus, parse_curve(s, s.require("curve")))
          .splitting;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InputError& e) {
    throw ConfigError(s.line, std::string(e.what()));
  }
  throw ConfigError(s.key_line("type"),
                    "unknown splitting type '" + type + "'");
}

Automorphism build_automorphism(const RawSection& s,
                                const std::map<std::string, Group>& groups) {
  std::string gname = s.require("group");
  auto it = groups.find(gname);
  if (it == groups.end()) {
    throw ConfigError(s.key_line("group"), "undefined group '" + gname + "'");
  }
  const Group& g = it->second;
  std::string type = s.require("type");
  try {
    if (type == "inner") {
      check_keys(s, {"group", "type", "word"});
      return Automorphism::inner(
          g, parse_word_at(s, "word", s.require("word"), g.alphabet()));
    }
    if (type == "twist") {
      check_keys(s, {"group", "type", "curve"});
      const auto* strat = std::get_if<SurfaceStrategy>(&g.strategy());
      if (!strat) {
        throw ConfigError(s.key_line("group"),
                          "twist automorphisms require a surface group");
      }
      return dehn_twist(strat->genus, parse_curve(s, s.require("curve")));
    }
    if (type == "map") {
      check_keys(s, {"group", "type"}, /*allow_image_maps=*/true);
      std::map<GenId, Word> fwd, bwd;
      for (GenId gen : g.presentation().generators) {
        fwd[gen] = Word::generator(gen);
        bwd[gen] = Word::generator(gen);
      }
      for (const auto& [key, entry] : s.kv) {
        bool is_fwd = key.rfind("image.", 0) == 0;
        bool is_bwd = key.rfind("inverse.", 0) == 0;
        if (!is_fwd && !is_bwd) continue;
        std::string gen_name_str = key.substr(is_fwd ? 6 : 8);
        GenId gen = intern_generator(gen_name_str);
        if (!g.alphabet().contains(gen)) {
          throw ConfigError(entry.first, "group '" + gname +
                                             "' has no generator '" +
                                             gen_name_str + "'");
        }
        Word w = parse_word_at(s, key, entry.second, g.alphabet());
        (is_fwd ? fwd : bwd)[gen] = std::move(w);
      }
      // deliberately not rejected when the pair fails the automorphism
      // check: the CLI surfaces that through `extend`, so broken maps can
      // serve as negative controls
      return Automorphism(Homomorphism(g, g, std::move(fwd)),
                          Homomorphism(g, g, std::move(bwd)));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InputError& e) {
    throw ConfigError(s.line, std::string(e.what()));
  }
  throw ConfigError(s.key_line("type"),
                    "unknown automorphism type '" + type + "'");
}

}  // namespace

const Group& SessionConfig::group(const std::string& name) const {
  auto it = groups.find(name);
  if (it == groups.end()) throw InputError("undefined group '" + name + "'");
  return it->second;
}

const Splitting& SessionConfig::splitting(const std::string& name) const {
  auto it = splittings.find(name);
  if (it == splittings.end()) {
    throw InputError("undefined splitting '" + name + "'");
  }
  return *it->second;
}

const Automorphism& SessionConfig::automorphism(const std::string& name) const {
  auto it = automorphisms.find(name);
  if (it == automorphisms.end()) {
    throw InputError("undefined automorphism '" + name + "'");
  }
  return it->second;
}

SessionConfig parse_config(const std::string& text) {
  std::vector<RawSection> sections;
  std::istringstream in(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(line_no, "unterminated section header");
      }
      std::vector<std::string> toks =
          split_ws(line.substr(1, line.size() - 2));
      RawSection sec;
      sec.line = line_no;
      if (toks.size() == 1 && toks[0] == "defaults") {
        sec.kind = "defaults";
      } else if (toks.size() == 2 &&
                 (toks[0] == "group" || toks[0] == "splitting" ||
                  toks[0] == "automorphism")) {
        sec.kind = toks[0];
        sec.name = toks[1];
      } else {
        throw ConfigError(line_no, "bad section header '" + line + "'");
      }
      sections.push_back(std::move(sec));
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_no, "expected 'key = value'");
    }
    if (sections.empty()) {
      throw ConfigError(line_no, "key outside of any section");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "empty key");
    auto& kv = sections.back().kv;
    if (kv.count(key)) {
      throw ConfigError(line_no, "duplicate key '" + key + "'");
    }
    kv[key] = {line_no, value};
  }

  SessionConfig cfg;
  for (const RawSection& s : sections) {
    if (s.kind != "defaults") continue;
    check_keys(s, {"word_bound", "ball_radius", "transversal_bound",
                   "witness_bound", "seed"});
    if (const std::string* v = s.find("word_bound"))
      cfg.defaults.word_bound = positive_int(s, "word_bound", *v);
    if (const std::string* v = s.find("ball_radius"))
      cfg.defaults.ball_radius = positive_int(s, "ball_radius", *v);
    if (const std::string* v = s.find("transversal_bound"))
      cfg.defaults.transversal_bound = positive_int(s, "transversal_bound", *v);
    if (const std::string* v = s.find("witness_bound"))
      cfg.defaults.witness_bound = positive_int(s, "witness_bound", *v);
    if (const std::string* v = s.find("seed"))
      cfg.defaults.seed = static_cast<std::uint64_t>(to_ll(s, "seed", *v));
  }
  for (const RawSection& s : sections) {
    if (s.kind != "group") continue;
    if (cfg.groups.count(s.name)) {
      throw ConfigError(s.line, "duplicate group '" + s.name + "'");
    }
    cfg.groups.emplace(s.name, build_group(s));
  }
  for (const RawSection& s : sections) {
    if (s.kind != "splitting") continue;
    if (cfg.splittings.count(s.name)) {
      throw ConfigError(s.line, "duplicate splitting '" + s.name + "'");
    }
    cfg.splittings.emplace(s.name, build_splitting(s, cfg.groups));
  }
  for (const RawSection& s : sections) {
    if (s.kind != "automorphism") continue;
    if (cfg.automorphisms.count(s.name)) {
      throw ConfigError(s.line, "duplicate automorphism '" + s.name + "'");
    }
    cfg.automorphisms.emplace(s.name, build_automorphism(s, cfg.groups));
  }
  return cfg;
}

SessionConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace treesplit
