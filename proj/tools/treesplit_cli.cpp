#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "treesplit/config.hpp"

using namespace treesplit;

namespace {

int code_for(Verdict v) { return v == Verdict::ViolationWitness ? 1 : 0; }

std::string vertex_text(const Splitting& s, const TreeVertex& v) {
  std::string orbit = s.is_hnn() ? "V" : (v.orbit == Factor::A ? "VA" : "VB");
  return orbit + "(" + format_word(s.normal_form_word(v.rep)) + ")";
}

TreeVertex parse_vertex_spec(const Splitting& s, const std::string& spec) {
  std::string orbit = spec;
  std::string rep_text;
  std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    orbit = spec.substr(0, colon);
    rep_text = spec.substr(colon + 1);
  }
  Factor f;
  if (orbit == "A") {
    f = Factor::A;
  } else if (orbit == "B" && !s.is_hnn()) {
    f = Factor::B;
  } else {
    throw InputError("vertex spec must be A[:word]" +
                     std::string(s.is_hnn() ? "" : " or B[:word]"));
  }
  return TreeVertex{f, parse_word(rep_text, s.whole_alphabet())};
}

// transplant a config-group automorphism onto the splitting's whole group
Automorphism on_whole(const Splitting& s, const Automorphism& a) {
  Group whole = s.whole();
  for (GenId g : whole.presentation().generators) {
    if (!a.group().alphabet().contains(g)) {
      throw InputError("automorphism group does not cover generator '" +
                       generator_name(g) + "' of the splitting");
    }
  }
  return Automorphism(Homomorphism(whole, whole, a.forward().images()),
                      Homomorphism(whole, whole, a.backward().images()));
}

SuiteResult bs_pipeline(int p, int q, int k_max) {
  SuiteResult suite;
  suite.name = "bs_pipeline";
  suite.add(bs_suite(p, q, k_max));

  Group a = Group::free_group({"x"});
  Group c = Group::free_group({"c"});
  GenId x = a.presentation().generators[0];
  auto s = Splitting::hnn(a, c, {Word::generator(x, p)},
                          {Word::generator(x, q)}, "t");
  suite.add(check_c1(*s));
  TreeVertex base{Factor::A, Word()};
  suite.add(check_c2(*s, base, 2, 6));

  std::vector<Word> powers;
  for (int k = 1; k <= 5; ++k) powers.push_back(Word::generator(x, 2 * k));
  suite.add(check_faithful_words(*s, powers, 4, 1));
  suite.add(check_minimal_and_not_line(*s, 3, 1));

  {
    CheckReport r;
    r.name = "classification_t";
    GenId t = intern_generator("t");
    IsometryClass cls = classify_element(*s, Word::generator(t), base);
    if (cls.kind == IsometryClass::Kind::Hyperbolic &&
        cls.translation_length == 1) {
      r.verdict = Verdict::Verified;
      r.witness = "hyperbolic translation_length=1";
    } else {
      r.verdict = Verdict::ViolationWitness;
      r.witness = "t did not classify as hyperbolic with length 1";
    }
    suite.add(std::move(r));
  }
  return suite;
}

SuiteResult free_product_pipeline() {
  SuiteResult suite;
  suite.name = "free_product_pipeline";
  Group a = Group::free_abelian({"u1", "u2"});
  Group b = Group::free_abelian({"v1", "v2", "v3"});
  auto s = Splitting::amalgam(a, b, Group::free_group({}), {}, {});
  suite.add(check_c1(*s));
  suite.add(check_c2(*s, TreeVertex{Factor::A, Word()}, 1, 4));
  suite.add(check_faithful(*s, 2, 3, 1));
  suite.add(check_minimal_and_not_line(*s, 2, 1));
  return suite;
}

int run(int argc, char** argv) {
  CLI::App app{"splittings of groups, coset-tree actions, and bounded "
               "verification suites"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "session config file");

  auto* nf = app.add_subcommand("nf", "normal form of a word in a group");
  std::string nf_group, nf_word;
  nf->add_option("group", nf_group, "group name")->required();
  nf->add_option("word", nf_word, "word literal")->required();

  auto* ball = app.add_subcommand("ball", "expand a ball of the coset tree");
  std::string ball_splitting, ball_dot;
  int ball_radius = -1, ball_bound = -1;
  bool ball_bary = false;
  ball->add_option("splitting", ball_splitting, "splitting name")->required();
  ball->add_option("--radius", ball_radius, "ball radius");
  ball->add_option("--bound", ball_bound, "transversal length bound");
  ball->add_option("--dot", ball_dot, "write DOT to this file");
  ball->add_flag("--barycentric", ball_bary, "subdivide edges in DOT output");

  auto* act_cmd = app.add_subcommand("act", "apply a group element to a vertex");
  std::string act_splitting, act_word, act_vertex;
  act_cmd->add_option("splitting", act_splitting)->required();
  act_cmd->add_option("word", act_word, "word literal")->required();
  act_cmd->add_option("vertex", act_vertex, "A[:word] or B[:word]")->required();

  auto* check = app.add_subcommand("check", "run verification checks");
  std::string check_splitting, check_which = "all";
  int check_word_bound = -1, check_radius = -1, check_bound = -1;
  int check_conj = 2, check_power = 6;
  check->add_option("splitting", check_splitting)->required();
  check->add_option("which", check_which,
                    "c1 | c2 | faithful | minimal | all");
  check->add_option("--word-bound", check_word_bound);
  check->add_option("--radius", check_radius);
  check->add_option("--bound", check_bound, "transversal length bound");
  check->add_option("--conj-bound", check_conj);
  check->add_option("--power-bound", check_power);

  auto* extend = app.add_subcommand(
      "extend", "extend an automorphism to a tree isometry");
  std::string ext_splitting, ext_auto;
  int ext_witness_bound = -1;
  extend->add_option("splitting", ext_splitting)->required();
  extend->add_option("automorphism", ext_auto)->required();
  extend->add_option("--witness-bound", ext_witness_bound);

  auto* suite = app.add_subcommand("suite", "run a named pipeline");
  std::string suite_which, suite_curve = "nonseparating";
  int suite_p = 2, suite_q = 3, suite_kmax = 4, suite_genus = 2;
  suite->add_option("which", suite_which, "bs | surface | freeproduct")
      ->required();
  suite->add_option("--p", suite_p);
  suite->add_option("--q", suite_q);
  suite->add_option("--kmax", suite_kmax);
  suite->add_option("--genus", suite_genus);
  suite->add_option("--curve", suite_curve,
                    "nonseparating | separating:<h>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  SessionConfig cfg;
  auto need_config = [&]() -> SessionConfig& {
    if (config_path.empty()) {
      throw InputError("this command requires --config");
    }
    cfg = load_config_file(config_path);
    return cfg;
  };

  if (*nf) {
    const Group& g = need_config().group(nf_group);
    Word w = parse_word(nf_word, g.alphabet());
    std::cout << format_word(g.normal_form(w)) << "\n";
    return 0;
  }

  if (*ball) {
    SessionConfig& c = need_config();
    const Splitting& s = c.splitting(ball_splitting);
    int radius = ball_radius > 0 ? ball_radius : c.defaults.ball_radius;
    int bound = ball_bound > 0 ? ball_bound : c.defaults.transversal_bound;
    TreeBall b = expand_ball(s, TreeVertex{Factor::A, Word()}, radius, bound);
    std::size_t truncated = 0;
    for (bool t : b.truncated) truncated += t ? 1 : 0;
    std::cout << "vertices=" << b.size() << " edges=" << b.edge_count()
              << " radius=" << radius << " transversal_bound=" << bound
              << " frontier=" << truncated << "\n";
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::cout << "v" << i << " depth=" << b.depth[i]
                << " parent=" << b.parent[i] << " "
                << vertex_text(s, b.vertices[i]) << "\n";
    }
    if (!ball_dot.empty()) {
      std::ofstream out(ball_dot);
      if (!out) throw InputError("cannot write '" + ball_dot + "'");
      out << export_dot(s, b, DotOptions{ball_bary});
    }
    return 0;
  }

  if (*act_cmd) {
    const Splitting& s = need_config().splitting(act_splitting);
    Word g = parse_word(act_word, s.whole_alphabet());
    TreeVertex v = parse_vertex_spec(s, act_vertex);
    TreeVertex moved = act(s, g, v);
    std::cout << vertex_text(s, moved)
              << " displacement=" << distance_geodesic(s, v, moved).distance
              << "\n";
    return 0;
  }

  if (*check) {
    SessionConfig& c = need_config();
    const Splitting& s = c.splitting(check_splitting);
    int word_bound =
        check_word_bound > 0 ? check_word_bound : c.defaults.word_bound;
    int radius = check_radius > 0 ? check_radius : c.defaults.ball_radius;
    int bound = check_bound > 0 ? check_bound : c.defaults.transversal_bound;
    std::vector<CheckReport> reports;
    bool all = check_which == "all";
    if (all || check_which == "c1") reports.push_back(check_c1(s));
    if (all || check_which == "c2") {
      reports.push_back(
          check_c2(s, TreeVertex{Factor::A, Word()}, check_conj, check_power));
    }
    if (all || check_which == "faithful") {
      reports.push_back(check_faithful(s, word_bound, radius, bound));
    }
    if (all || check_which == "minimal") {
      reports.push_back(check_minimal_and_not_line(s, radius, bound));
    }
    if (reports.empty()) {
      throw InputError("unknown check '" + check_which + "'");
    }
    std::cout << render_reports(reports);
    int code = 0;
    for (const CheckReport& r : reports) code = std::max(code, code_for(r.verdict));
    return code;
  }

  if (*extend) {
    SessionConfig& c = need_config();
    const Splitting& s = c.splitting(ext_splitting);
    int bound =
        ext_witness_bound > 0 ? ext_witness_bound : c.defaults.witness_bound;
    Automorphism phi = on_whole(s, c.automorphism(ext_auto));
    std::vector<CheckReport> reports;
    {
      CheckReport r = phi.check();
      r.name = "automorphism";
      reports.push_back(std::move(r));
    }
    std::optional<ExtendedIsometry> iso = find_witness(s, phi, bound);
    CheckReport found;
    found.name = "extension";
    found.bounds = "witness_bound=" + std::to_string(bound);
    if (iso) {
      found.verdict = Verdict::Verified;
      found.witness = "x=" + format_word(iso->witness);
    } else {
      found.verdict = Verdict::NoViolationUpTo;
      found.note = "no extension witness up to bound";
    }
    reports.push_back(std::move(found));
    if (iso) {
      TreeVertex base{Factor::A, Word()};
      TreeBall b =
          expand_ball(s, base, 2, c.defaults.transversal_bound);
      std::vector<Word> sample;
      for_each_reduced_word(s.whole_alphabet(), 2, [&](const Word& w) {
        sample.push_back(w);
        return true;
      });
      reports.push_back(check_compatibility(s, *iso, b, sample));
      IsometryClass cls = classify_isometry(s, *iso, base);
      CheckReport r;
      r.name = "classification";
      r.verdict = Verdict::Verified;
      switch (cls.kind) {
        case IsometryClass::Kind::Elliptic:
          r.witness = "elliptic fixed=" + vertex_text(s, *cls.fixed);
          break;
        case IsometryClass::Kind::Hyperbolic:
          r.witness = "hyperbolic translation_length=" +
                      std::to_string(cls.translation_length);
          break;
        case IsometryClass::Kind::UnknownWithinBound:
          r.verdict = Verdict::NoViolationUpTo;
          r.note = "classification inconclusive at this probe";
          break;
      }
      reports.push_back(std::move(r));
      reports.push_back(check_lambda_membership(s, phi, bound));
    }
    std::cout << render_reports(reports);
    int code = 0;
    for (const CheckReport& r : reports) code = std::max(code, code_for(r.verdict));
    return code;
  }

  if (*suite) {
    SuiteResult result;
    if (suite_which == "bs") {
      result = bs_pipeline(suite_p, suite_q, suite_kmax);
    } else if (suite_which == "surface") {
      CurveSpec curve = suite_curve == "nonseparating"
                            ? CurveSpec::nonseparating()
                            : CurveSpec::separating(std::stoi(
                                  suite_curve.substr(suite_curve.find(':') + 1)));
      if (suite_curve != "nonseparating" &&
          suite_curve.rfind("separating:", 0) != 0) {
        throw InputError("curve must be nonseparating or separating:<h>");
      }
      result = curve_stabilizer_suite(suite_genus, curve);
    } else if (suite_which == "freeproduct") {
      result = free_product_pipeline();
    } else {
      throw InputError("unknown suite '" + suite_which + "'");
    }
    std::cout << result.render();
    return result.passed() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
