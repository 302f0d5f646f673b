// One PASS/FAIL line per acceptance criterion, with wall-clock limits.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "quintic/reference_suite.hpp"

using namespace quintic;

namespace {

struct Limit {
  int id;
  double seconds;  // 0 = no limit
};

constexpr Limit kLimits[] = {{1, 1.0}, {2, 600.0}, {3, 300.0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}, {8, 1.0}, {9, 0}};

std::string run_cli(const std::string& env) {
  const std::string cmd = env + " " + QUINTIC_CLI + " verify paper";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "";
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  return out;
}

void print(int id, bool ok, const std::string& name, double secs, const std::string& detail) {
  std::printf("[%s] C%-2d %-36s %8.3fs  %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs, detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  SuiteOptions opts;
  opts.threads = 1;  // one-core timing
  int failed = 0;
  for (const Limit& l : kLimits) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = run_criterion(l.id, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.passed;
    std::string detail = r.detail;
    if (l.seconds > 0 && secs >= l.seconds) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(l.seconds)) + " s limit)";
    }
    failed += !ok;
    print(l.id, ok, r.name, secs, detail);
  }

  // Determinism: two full CLI reports, with different thread counts.
  auto t0 = std::chrono::steady_clock::now();
  const std::string a = run_cli("QUINTIC_THREADS=1"), b = run_cli("QUINTIC_THREADS=2");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool same = !a.empty() && a == b;
  failed += !same;
  print(10, same, "determinism of verify paper", secs,
        same ? "two reports byte-identical (" + std::to_string(a.size()) + " bytes)" : "reports differ");
  std::printf("%d/%d criteria passed\n", kCriteria - failed, kCriteria);
  return failed ? 1 : 0;
}
