// One PASS/FAIL line per acceptance criterion, full scale, seed 1.
#include <chrono>
#include <cstdio>
#include <string>

#include "satogr/verify.hpp"

using namespace satogr;

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  verify::Scale scale = verify::Scale::full;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--small") scale = verify::Scale::small;
    else if (a.rfind("--seed=", 0) == 0) seed = std::stoull(a.substr(7));
  }
  int failed = 0;
  for (const auto& c : verify::criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::int64_t instances = 0;
    std::string why;
    for (const auto& s : c.suites) {
      const auto r = verify::run_suite(s, seed, scale);
      for (const auto& p : r.properties) {
        if (p.informational) continue;
        instances += p.instances;
        if (!p.pass()) {
          pass = false;
          if (!why.empty()) why += "; ";
          why += p.name + " failed on " + std::to_string(p.failures) + "/" + std::to_string(p.instances) +
                 " (first: " + p.note + ")";
        }
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s [%lld checks, %.1f s]%s%s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                static_cast<long long>(instances), secs, pass ? "" : " -- ", why.c_str());
    if (!pass) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
