#include "ellcm/acceptance.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  int failed = 0;
  for (int id = 1; id <= 10; ++id) {
    ellcm::CriterionResult r = ellcm::run_criterion(id, seed);
    std::printf("%s\n", ellcm::summary_line(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d/10 criteria pass\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
