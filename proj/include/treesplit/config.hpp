#pragma once

#include <map>
#include <string>

#include "treesplit/surface.hpp"

namespace treesplit {

// Config parse/validation failure with the offending line number (0 when the
// problem is not tied to one line).
struct ConfigError : InputError {
  int line;
  ConfigError(int line_no, const std::string& message)
      : InputError("config line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
};

struct Defaults {
  int word_bound = 3;
  int ball_radius = 3;
  int transversal_bound = 2;
  int witness_bound = 3;
  std::uint64_t seed = 1;
};

// Parsed session: named groups, splittings, and automorphisms plus default
// bounds. All cross-references are resolved at parse time.
struct SessionConfig {
  Defaults defaults;
  std::map<std::string, Group> groups;
  std::map<std::string, std::shared_ptr<const Splitting>> splittings;
  std::map<std::string, Automorphism> automorphisms;

  const Group& group(const std::string& name) const;
  const Splitting& splitting(const std::string& name) const;
  const Automorphism& automorphism(const std::string& name) const;
};

// INI-like text: sections `[defaults]`, `[group NAME]`, `[splitting NAME]`,
// `[automorphism NAME]` with `key = value` lines; `#` starts a comment.
// Unknown keys, duplicate names, and dangling references are errors.
SessionConfig parse_config(const std::string& text);

SessionConfig load_config_file(const std::string& path);

}  // namespace treesplit
