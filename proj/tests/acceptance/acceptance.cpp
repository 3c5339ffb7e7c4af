// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>
#include <iostream>

#include "arbor/claims.hpp"

int main() {
  using namespace arbor;
  const ClaimRun run = verify_claims(ClaimOptions{});
  bool all = true;
  for (const auto& c : run.criteria) {
    const bool ok = c.status == Status::pass;
    all = all && ok;
    char timing[64];
    if (c.time_limit > 0) {
      std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", c.seconds, c.time_limit);
    } else {
      std::snprintf(timing, sizeof timing, "%.2fs", c.seconds);
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.criterion << "  " << c.title << "  (" << c.checks - c.failed
              << "/" << c.checks << " checks, " << timing << ")\n";
    if (ok) continue;
    for (const auto& r : run.results) {
      if (r.criterion != c.criterion || r.status == Status::pass) continue;
      std::cout << "      " << to_string(r.status) << " [" << r.suite << "] " << r.statement << ": " << r.detail
                << '\n';
    }
  }
  return all ? 0 : 1;
}
