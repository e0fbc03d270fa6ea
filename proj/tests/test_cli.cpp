#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "treesplit/config.hpp"

using namespace treesplit;

namespace {

const char* kConfig = R"(# session used by the golden tests
[defaults]
word_bound = 3
seed = 7

[group F]
type = free
generators = a b

[group C]
type = free
generators = c

[group bs23]
type = bs
p = 2
q = 3

[splitting bs23]
type = hnn
a = F
edge = C
emb0 = a^2
emb1 = a^3
stable = s

[splitting sep]
type = surface
genus = 2
curve = separating:1

[group W]
type = free
generators = a b s

[automorphism conj]
type = inner
group = W
word = a s
)";

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("TREESPLIT_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "TREESPLIT_CLI must point at the binary");
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_config(const std::string& text) {
  std::string path = "cli_session.cfg";
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("config parsing builds all referenced objects") {
  SessionConfig cfg = parse_config(kConfig);
  CHECK(cfg.defaults.word_bound == 3);
  CHECK(cfg.defaults.seed == 7);
  CHECK(cfg.defaults.ball_radius == 3);  // untouched default
  CHECK(cfg.groups.size() == 4);
  CHECK(cfg.splitting("bs23").is_hnn());
  CHECK_FALSE(cfg.splitting("sep").is_hnn());
  CHECK(cfg.automorphism("conj").check().verdict == Verdict::Verified);
  CHECK_THROWS_AS(cfg.group("nope"), InputError);
  CHECK_THROWS_AS(cfg.splitting("nope"), InputError);
}

TEST_CASE("config errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.line;
    }
    return -1;
  };

  // unknown key
  CHECK(line_of("[group G]\ntype = free\nbogus = 1\ngenerators = a\n") == 3);
  // dangling group reference
  CHECK(line_of("[splitting S]\ntype = hnn\na = missing\nemb0 = x\n"
                "emb1 = x\nstable = t\n") == 3);
  // duplicate key
  CHECK(line_of("[group G]\ntype = free\ntype = free\ngenerators = a\n") == 3);
  // duplicate section name
  CHECK(line_of("[group G]\ntype = free\ngenerators = a\n"
                "[group G]\ntype = free\ngenerators = b\n") == 4);
  // malformed header
  CHECK(line_of("[grp G]\n") == 1);
  // non-integer value
  CHECK(line_of("[defaults]\nseed = soup\n") == 2);
}

TEST_CASE("nf command prints the normal form") {
  std::string cfg = write_config(kConfig);
  RunResult r = run_cli("--config " + cfg + " nf bs23 \"t x^2 t^-1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x^3\n");

  RunResult bad = run_cli("--config " + cfg + " nf bs23 \"z\"");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("ball output is deterministic") {
  std::string cfg = write_config(kConfig);
  auto read_file = [](const std::string& path) {
    std::ifstream f(path);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  std::string args = "--config " + cfg +
                     " ball bs23 --radius 2 --bound 2 --dot ball_out.dot";
  RunResult r1 = run_cli(args);
  std::string dot1 = read_file("ball_out.dot");
  RunResult r2 = run_cli(args);
  std::string dot2 = read_file("ball_out.dot");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("vertices=") != std::string::npos);
  CHECK(dot1 == dot2);
  CHECK(dot1.find("graph") != std::string::npos);
}

TEST_CASE("act command reports the image vertex") {
  std::string cfg = write_config(kConfig);
  RunResult r = run_cli("--config " + cfg + " act bs23 \"s\" A");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("displacement=1") != std::string::npos);
}

TEST_CASE("check exit codes distinguish violation from pass") {
  std::string cfg = write_config(kConfig);
  RunResult ok = run_cli("--config " + cfg + " check bs23 c1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("verdict=Verified") != std::string::npos);

  // BS(2,4) stabilizer chain nests: c2 must exit 1
  std::string bad_cfg = write_config(std::string(kConfig) +
                                     "\n[group H]\ntype = free\n"
                                     "generators = h\n"
                                     "[splitting bs24]\ntype = hnn\na = H\n"
                                     "edge = C\nemb0 = h^2\nemb1 = h^4\n"
                                     "stable = t\n");
  RunResult bad = run_cli("--config " + bad_cfg + " check bs24 c2");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("verdict=ViolationWitness") != std::string::npos);

  RunResult usage = run_cli("--config no_such_file.cfg check bs23 c1");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("extend certifies the inner automorphism end to end") {
  std::string cfg = write_config(kConfig);
  RunResult r = run_cli("--config " + cfg + " extend bs23 conj");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict=Verified") != std::string::npos);
  CHECK(r.out.find("witness") != std::string::npos);
}

TEST_CASE("suite reruns are byte-identical") {
  RunResult r1 = run_cli("suite bs --p 2 --q 3 --kmax 3");
  RunResult r2 = run_cli("suite bs --p 2 --q 3 --kmax 3");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  RunResult fp = run_cli("suite freeproduct");
  CHECK(fp.exit_code == 0);
}
