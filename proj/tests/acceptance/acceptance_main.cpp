// Acceptance suite: one pass/fail line per criterion. Findings are printed
// with the criterion they belong to; they document identities of the source
// constructions that fail under the literal conventions and are expected to
// be present (the suite verifies that too, so a vanished finding is caught).

#include <cstdio>
#include <string>

#include "dessins/acceptance.hpp"

int main(int argc, char** argv) {
  std::string only = argc > 1 ? argv[1] : "";
  auto results = dessins::run_acceptance(only);
  int failed = 0;
  int findings = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds);
    for (const auto& d : r.details) std::printf("         %s\n", d.c_str());
    for (const auto& f : r.findings) {
      std::printf("         FINDING: %s\n", f.c_str());
      ++findings;
    }
    if (!r.pass) ++failed;
  }
  std::printf("%zu criteria run, %d failed, %d documented findings\n", results.size(),
              failed, findings);
  if (only.empty()) {
    // the literal-class coassociativity obstruction is a real property of the
    // construction; its disappearance would mean the implementation changed
    bool obstruction_recorded = false;
    for (const auto& r : results)
      if (r.id == 3)
        for (const auto& f : r.findings)
          if (f.find("coassociativity fails at the 2-edge path") != std::string::npos)
            obstruction_recorded = true;
    if (!obstruction_recorded) {
      std::printf("expected documented finding missing from criterion 3\n");
      return 1;
    }
  }
  return failed == 0 ? 0 : 1;
}
