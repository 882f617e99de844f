#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ellcm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget = 0;  // wall-time limit in seconds
  // named measurements, e.g. {"A3 l=2 rll", 2e-15}
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::string> failures;
};

// Criteria 1..10; ids outside that range throw std::out_of_range.
CriterionResult run_criterion(int id, std::uint64_t seed = 7);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 7);

// "criterion 4: PASS  GS basis  (0.21 s / 120 s)"
std::string summary_line(const CriterionResult& r);

}  // namespace ellcm
