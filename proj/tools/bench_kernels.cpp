// Times the check kernels in serial and OpenMP modes and verifies the
// reports are byte-identical.
#include <chrono>
#include <iostream>

#include "treesplit/surface.hpp"

using namespace treesplit;

namespace {

template <typename F>
double seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  return d.count();
}

void bench(const std::string& name, const std::function<CheckReport(Exec)>& run) {
  CheckReport serial, parallel;
  double ts = seconds([&] { serial = run(Exec::Serial); });
  double tp = seconds([&] { parallel = run(Exec::Parallel); });
  bool same = serial.line() == parallel.line();
  std::cout << name << ": serial=" << ts << "s parallel=" << tp
            << "s speedup=" << (tp > 0 ? ts / tp : 0)
            << (same ? "" : "  REPORTS DIFFER") << "\n";
  if (!same) {
    std::cout << "  serial:   " << serial.line() << "\n";
    std::cout << "  parallel: " << parallel.line() << "\n";
  }
}

}  // namespace

int main() {
  std::cout << "threads=" << max_threads() << "\n";

  SplittingWitness hnn = split_along_curve(2, CurveSpec::nonseparating());
  SplittingWitness am = split_along_curve(2, CurveSpec::separating(1));
  Group surf = surface_group(2);

  bench("faithful hnn (|g|<=3, r=3)", [&](Exec e) {
    return check_faithful(*hnn.splitting, 3, 3, 1, e);
  });
  bench("faithful amalgam (|g|<=3, r=4)", [&](Exec e) {
    return check_faithful(*am.splitting, 3, 4, 1, e);
  });
  bench("solver agreement (exhaustive<=6 + 2000 random<=20)", [&](Exec e) {
    return solver_agreement(*am.splitting, surf, 6, 2000, 20, 7, e);
  });
  bench("compatibility twist (|g|<=2, r=2)", [&](Exec e) {
    Automorphism t = dehn_twist(2, CurveSpec::nonseparating());
    Group whole = hnn.splitting->whole();
    Automorphism tw(Homomorphism(whole, whole, t.forward().images()),
                    Homomorphism(whole, whole, t.backward().images()));
    auto iso = find_witness(*hnn.splitting, tw, 2);
    if (!iso) throw std::logic_error("no twist witness");
    TreeBall ball = expand_ball(*hnn.splitting, TreeVertex{Factor::A, Word()},
                                2, 1);
    std::vector<Word> sample;
    for_each_reduced_word(hnn.splitting->whole_alphabet(), 2,
                          [&](const Word& w) {
                            sample.push_back(w);
                            return true;
                          });
    return check_compatibility(*hnn.splitting, *iso, ball, sample, e);
  });
  return 0;
}
