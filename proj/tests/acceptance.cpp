// One line per criterion; exit status is nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include "finst/acceptance.hpp"

int main(int argc, char** argv) {
  const bool timing = argc > 1 && std::string(argv[1]) == "--timing";
  int failed = 0;
  for (int id = 1; id <= 10; ++id) {
    try {
      const auto r = finst::run_criterion(id);
      if (!r.pass) ++failed;
      std::printf("[%s] criterion %d: %s: %s", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
      if (timing) std::printf(" (%.2fs)", r.seconds);
      std::printf("\n");
    } catch (const std::exception& e) {
      ++failed;
      std::printf("[FAIL] criterion %d: error: %s\n", id, e.what());
    }
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
