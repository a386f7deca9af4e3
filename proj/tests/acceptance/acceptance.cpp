// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "verify.hpp"

using namespace octograss::cli;
using octograss::VerificationReport;

namespace {

struct Selection {
  std::vector<const VerificationReport*> checks;
  std::vector<std::string> failures;
};

Selection select(const SuiteResult& r, const std::function<bool(const std::string&)>& keep) {
  Selection s;
  for (const auto& c : r.checks) {
    if (!keep(c.id)) continue;
    s.checks.push_back(&c);
    if (!c.passed) s.failures.push_back(c.id + " (" + c.computed + ")");
  }
  return s;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

double timed_seconds(const std::vector<std::string>& suites) {
  Config c;
  c.timing = true;
  c.suites = suites;
  const auto start = std::chrono::steady_clock::now();
  run_suites(c);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& title, const Selection& s, const std::string& extra = "",
            bool extra_ok = true) {
  const bool ok = !s.checks.empty() && s.failures.empty() && extra_ok;
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s (%zu checks%s%s)\n", ok ? "PASS" : "FAIL", id, title.c_str(),
              s.checks.size(), extra.empty() ? "" : ", ", extra.c_str());
  for (const auto& f : s.failures) std::printf("         failed: %s\n", f.c_str());
  std::fflush(stdout);
}

std::string seconds_note(double s, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s, limit %.0f s", s, limit);
  return buf;
}

}  // namespace

int main() {
  Config config;
  config.seed = 42;
  config.suites = {"all"};
  const SuiteResult first = run_suite("all", config);
  const std::string json_a = to_json(config, first).dump(2);

  {
    const double t = timed_seconds({"octonion"});
    report(1, "octonion table, norm multiplicativity, triple-product swap",
           select(first, [](const std::string& id) { return starts_with(id, "octonion."); }),
           seconds_note(t, 1.0), t < 1.0);
  }
  {
    const double t = timed_seconds({"lemmas-sigma3", "lemmas-J", "curvature"});
    report(2, "closed-form derivative and curvature tables of sigma3 and J",
           select(first,
                  [](const std::string& id) {
                    return starts_with(id, "sigma3.") || starts_with(id, "J.");
                  }),
           seconds_note(t, 10.0), t < 10.0);
  }
  report(3, "Laplacian eigen-relations -12, -8, -8",
         select(first, [](const std::string& id) { return starts_with(id, "laplacian."); }));
  report(4, "criticality 1-forms vanish",
         select(first, [](const std::string& id) { return starts_with(id, "criticality."); }));
  report(5, "Phi o sigma2 = sigma3 o phi",
         select(first, [](const std::string& id) { return starts_with(id, "diagram."); }));
  report(6, "parallel transport closed form and sin^2 t obstruction",
         select(first, [](const std::string& id) { return starts_with(id, "parallel."); }));
  {
    const auto start = std::chrono::steady_clock::now();
    Config c;
    c.suites = {"energy"};
    const SuiteResult energy = run_suites(c);
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(7, "bending densities 12, 8, 8 and energy densities",
           select(first, [](const std::string& id) { return starts_with(id, "energy."); }),
           seconds_note(t, 60.0), t < 60.0 && energy.failed() == 0);
  }
  report(8, "first variations vanish; perturbed control does not",
         select(first, [](const std::string& id) { return starts_with(id, "variation."); }));
  report(9, "hopf and acs6 structure checks",
         select(first, [](const std::string& id) { return starts_with(id, "extension."); }));
  {
    const SuiteResult second = run_suite("all", config);
    const std::string json_b = to_json(config, second).dump(2);
    Selection all = select(second, [](const std::string&) { return true; });
    all.failures.clear();
    report(10, "run_suite(\"all\", seed 42) twice gives byte-identical JSON", all,
           json_a == json_b ? "identical" : "differs", json_a == json_b);
  }

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
