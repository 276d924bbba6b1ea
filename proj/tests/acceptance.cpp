// Acceptance suite: runs every verification criterion and prints one
// pass/fail line each. Exit status 0 only when all pass.
#include <cstdio>

#include "pipedream/verify.hpp"

int main() {
  auto results = pipedream::verify_all();
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
