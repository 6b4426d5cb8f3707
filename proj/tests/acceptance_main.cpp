// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all criteria pass.
#include <cstdio>

#include "polyharm/selfcheck.hpp"

int main() {
  const auto report = polyharm::run_selfcheck(128);
  for (const auto& w : report.warnings) std::printf("warning: %s\n", w.c_str());
  for (const auto& c : report.criteria) std::printf("%s\n", c.summary().c_str());
  std::printf("%s\n", report.pass() ? "acceptance: all criteria pass"
                                    : "acceptance: at least one criterion failed");
  return report.pass() ? 0 : 1;
}
